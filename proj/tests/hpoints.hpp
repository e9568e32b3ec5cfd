#pragma once

#include <array>
#include <vector>

// Boundary points H_j of the maximal horoball at ideal vertex 0, on the edge
// toward vertex j, in affine coordinates. Exact expressions frozen from the
// reference computation.

namespace hpoints {

struct Entry {
    const char* witt;
    int j;
    std::array<const char*, 6> coords;
};

inline const std::vector<Entry>& table() {
    static const std::vector<Entry> t = {
        {"U5", 1, {"1", "0", "0", "0", "0", "0"}},
        {"U5", 2, {"1", "4/9", "0", "0", "0", "1/9"}},
        {"U5", 3, {"1", "3/7", "sqrt(3)/7", "0", "0", "1/7"}},
        {"U5", 4, {"1", "8/19", "8/(19*sqrt(3))", "4*sqrt(2/3)/19", "0", "3/19"}},
        {"U5", 5, {"1", "2/5", "2/(5*sqrt(3))", "sqrt(2/3)/5", "sqrt(2)/5", "1/5"}},

        {"S5", 1, {"1", "0", "0", "0", "0", "0"}},
        {"S5", 2, {"1", "0", "0", "0", "2*sqrt(2)/5", "1/5"}},
        {"S5", 3, {"1", "0", "0", "2*sqrt(6)/19", "6*sqrt(2)/19", "3/19"}},
        {"S5", 4, {"1", "0", "4/(9*sqrt(3))", "2*sqrt(2/3)/9", "2*sqrt(2)/9", "1/9"}},
        {"S5", 5, {"1", "2/5", "2/(5*sqrt(3))", "sqrt(2/3)/5", "sqrt(2)/5", "1/5"}},

        {"Q5", 1, {"1", "0", "0", "0", "0", "0"}},
        {"Q5", 2, {"1", "0", "0", "0", "-4/9", "1/9"}},
        {"Q5", 3, {"1", "0", "0", "2/5", "-2/5", "1/5"}},
        {"Q5", 4, {"1", "0", "-2/5", "0", "-2/5", "1/5"}},
        {"Q5", 5, {"1", "-2/5", "0", "0", "-2/5", "1/5"}},

        {"P5", 1, {"1", "0", "0", "0", "0", "0"}},
        {"P5", 2, {"1", "0", "0", "0", "sqrt(5/2)/3", "1/6"}},
        {"P5", 3, {"1", "0", "0", "5*sqrt(3/2)/13", "3*sqrt(5/2)/13", "3/13"}},
        {"P5", 4, {"1", "0", "10/(13*sqrt(3))", "5*sqrt(2/3)/13", "sqrt(10)/13", "3/13"}},
        {"P5", 5, {"1", "5/12", "5/(12*sqrt(3))", "5/(12*sqrt(6))", "sqrt(5/2)/12", "1/6"}},
    };
    return t;
}

} // namespace hpoints
