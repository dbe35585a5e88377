#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "funk/domain.hpp"
#include "funk/errors.hpp"

namespace funk {

/// Domain spec document:
///   {"kind": "disk",    "base_point": [x, y]}
///   {"kind": "ellipse", "params": {"a": 2.0, "b": 1.0}, "base_point": [x, y]}
///   {"kind": "fourier", "params": {"const": 1.0, "cos": [...], "sin": [...]},
///    "base_point": [0, 0]}
///
/// base_point is the position of o relative to the curve's natural center
/// and defaults to [0, 0]. Fourier domains require base_point [0, 0].
inline BoundaryCurve domain_from_json(const nlohmann::json& doc) {
    const auto fail = [](const std::string& field, const std::string& msg) {
        raise(ErrorCode::InvalidDomainSpec, "domain spec field '" + field + "': " + msg);
    };
    if (!doc.is_object()) fail("<root>", "expected a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string()) fail("kind", "missing or not a string");
    const std::string kind = doc["kind"].get<std::string>();

    Vec2 base{0.0, 0.0};
    if (doc.contains("base_point")) {
        const auto& bp = doc["base_point"];
        if (!bp.is_array() || bp.size() != 2 || !bp[0].is_number() || !bp[1].is_number())
            fail("base_point", "expected [x, y]");
        base = {bp[0].get<double>(), bp[1].get<double>()};
    }

    try {
        if (kind == "disk") return BoundaryCurve::unit_disk(base);
        if (kind == "ellipse") {
            if (!doc.contains("params")) fail("params", "required for ellipse");
            const auto& p = doc["params"];
            if (!p.contains("a") || !p.contains("b")) fail("params", "need numeric a and b");
            return BoundaryCurve::ellipse(p["a"].get<double>(), p["b"].get<double>(), base);
        }
        if (kind == "fourier") {
            if (base.x != 0.0 || base.y != 0.0)
                fail("base_point", "fourier domains require base_point [0, 0]");
            double c0 = 1.0;
            std::vector<double> cs, ss;
            if (doc.contains("params")) {
                const auto& p = doc["params"];
                if (p.contains("const")) c0 = p["const"].get<double>();
                if (p.contains("cos")) cs = p["cos"].get<std::vector<double>>();
                if (p.contains("sin")) ss = p["sin"].get<std::vector<double>>();
            }
            return BoundaryCurve::fourier(c0, std::move(cs), std::move(ss));
        }
    } catch (const nlohmann::json::exception& e) {
        fail("params", e.what());
    }
    fail("kind", "unknown kind '" + kind + "' (disk | ellipse | fourier)");
    throw;  // unreachable
}

inline BoundaryCurve load_domain(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::InvalidDomainSpec, "cannot open domain spec: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::InvalidDomainSpec, std::string("domain spec parse error: ") + e.what());
    }
    return domain_from_json(doc);
}

}  // namespace funk
