#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "artifact/catalog.hpp"
#include "artifact/packing.hpp"
#include "artifact/real.hpp"

#include "golden.hpp"

namespace testutil {

using artifact::real;

inline real R(const std::string& s) { return real(s); }

inline bool near_abs(const real& a, const real& b, const std::string& eps) {
    return abs(a - b) < real(eps);
}

inline bool near_rel(const real& a, const real& b, const std::string& eps) {
    real scale = abs(b);
    if (scale == 0)
        scale = 1;
    return abs(a - b) / scale < real(eps);
}

inline real gstr(const nlohmann::json& j) { return real(j.get<std::string>()); }

inline const nlohmann::json& gsimplex(const std::string& witt) {
    return golden::doc().at("simplices").at(witt);
}

// Reference optimizer classes keyed by configuration: the recorded list has
// one entry per anchor, so symmetric anchors repeat a configuration.
inline std::vector<nlohmann::json> distinct_golden_classes(const std::string& witt) {
    std::vector<nlohmann::json> out;
    for (const auto& cls : gsimplex(witt).at("classes")) {
        bool seen = false;
        for (const auto& kept : out) {
            bool same = true;
            for (auto it = cls.at("t").begin(); it != cls.at("t").end(); ++it)
                if (!near_rel(gstr(it.value()), gstr(kept.at("t").at(it.key())), "1e-40"))
                    same = false;
            if (same) {
                seen = true;
                break;
            }
        }
        if (!seen)
            out.push_back(cls);
    }
    return out;
}

// The produced class whose levels match a recorded configuration.
inline const artifact::packing::PackingReport*
find_class(const std::vector<artifact::packing::PackingReport>& classes,
           const nlohmann::json& golden_class, const std::string& eps = "1e-20") {
    for (const auto& r : classes) {
        bool same = true;
        for (auto it = golden_class.at("t").begin(); it != golden_class.at("t").end(); ++it) {
            int v = std::stoi(it.key());
            auto found = r.config.balls.find(v);
            if (found == r.config.balls.end() ||
                !near_rel(found->second.t, gstr(it.value()), eps)) {
                same = false;
                break;
            }
        }
        if (same)
            return &r;
    }
    return nullptr;
}

} // namespace testutil
