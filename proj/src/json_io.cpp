#include "rstft/json_io.hpp"

#include <limits>
#include <sstream>

namespace rstft {

namespace {

std::string int_to_string(const Int& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

Int int_from_json(const json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return int_to_string(v);
}

}  // namespace

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
    std::size_t rows = j.size();
    std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j.at(i).size() != cols) throw std::invalid_argument("matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j.at(i).at(c));
    }
    return m;
}

json group_to_json(const FgAbGroup& g) {
    json torsion = json::array();
    for (const Int& d : g.torsion) torsion.push_back(int_to_json(d));
    return json{{"rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

FgAbGroup group_from_json(const json& j) {
    std::vector<Int> factors;
    if (j.contains("rank"))
        factors.assign(j.at("rank").get<std::size_t>(), Int(0));
    if (j.contains("torsion"))
        for (const json& d : j.at("torsion")) factors.push_back(int_from_json(d));
    return group_from_cyclic_factors(factors);
}

namespace {

json arf_to_json(ArfSign a) { return a == ArfSign::plus ? "+" : "-"; }

ArfSign arf_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "+" || s == "+1") return ArfSign::plus;
    if (s == "-" || s == "-1") return ArfSign::minus;
    throw std::invalid_argument("arf: expected \"+\" or \"-\"");
}

}  // namespace

json surface_to_json(const ClosedRSpinSurface& s) {
    switch (s.kind) {
        case ClosedRSpinSurface::Kind::sphere:
            return json{{"type", "sphere"}};
        case ClosedRSpinSurface::Kind::torus:
            return json{{"type", "torus"}, {"s", s.spin.s}, {"t", s.spin.t}};
        case ClosedRSpinSurface::Kind::higher_genus: {
            json out{{"type", "higher_genus"}, {"l", s.genus_param}};
            if (s.arf) out["arf"] = arf_to_json(*s.arf);
            return out;
        }
        case ClosedRSpinSurface::Kind::low_genus: {
            json out{{"type", "low_genus"}, {"g", s.genus_param}};
            if (s.arf) out["arf"] = arf_to_json(*s.arf);
            return out;
        }
    }
    throw std::logic_error("surface_to_json: unreachable");
}

ClosedRSpinSurface surface_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    std::optional<ArfSign> arf;
    if (j.contains("arf")) arf = arf_from_json(j.at("arf"));
    if (type == "sphere") return ClosedRSpinSurface::sphere();
    if (type == "torus")
        return ClosedRSpinSurface::torus(j.at("s").get<long long>(), j.at("t").get<long long>());
    if (type == "higher_genus")
        return ClosedRSpinSurface::higher_genus(j.at("l").get<long long>(), arf);
    if (type == "low_genus")
        return ClosedRSpinSurface::low_genus(j.at("g").get<long long>(), arf);
    throw std::invalid_argument("surface: unknown type \"" + type + "\"");
}

json surface_sum_to_json(const FormalSurfaceSum& x) {
    json out = json::array();
    for (const auto& [s, c] : x.terms)
        out.push_back(json{{"coeff", c}, {"surface", surface_to_json(s)}});
    return out;
}

FormalSurfaceSum surface_sum_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("surface sum: expected an array");
    FormalSurfaceSum out;
    for (const json& term : j) {
        long long coeff = term.contains("coeff") ? term.at("coeff").get<long long>() : 1;
        out.add(surface_from_json(term.at("surface")), coeff);
    }
    return out;
}

json skk_class_to_json(const SkkClass& c) {
    json out{{"r", c.r.value}};
    if (c.has_free_part()) out["j"] = c.j;
    if (c.has_torsion_part()) out["eps"] = c.eps;
    return out;
}

json expr_to_json(const FormalGroupExpr& e) {
    json factors = json::array();
    for (const std::string& f : e.factor_strings()) factors.push_back(f);
    return json{{"factors", std::move(factors)}, {"string", e.to_string()}};
}

PicardData picard_from_json(const json& j) {
    FgAbGroup pi0 = group_from_json(j.at("pi0"));

    Pi1Group pi1;
    const json& p1 = j.at("pi1");
    if (p1.is_string() && p1.get<std::string>() == "circle") {
        pi1 = Pi1Group::circle();
    } else if (p1.is_object() && p1.contains("circle") && p1.at("circle").get<bool>()) {
        pi1 = Pi1Group::circle_times(p1.contains("finite") ? group_from_json(p1.at("finite"))
                                                           : FgAbGroup::trivial());
    } else {
        pi1 = Pi1Group::finitely(group_from_json(p1));
    }

    std::vector<Pi1Elem> k;
    if (j.contains("k")) {
        for (const json& v : j.at("k")) {
            Pi1Elem e;
            e.coords = zero_element(pi1.finite_part);
            if (v.is_number_integer()) {
                e.sign = v.get<int>();
            } else if (v.is_array()) {
                e.coords.clear();
                for (const json& c : v) e.coords.push_back(int_from_json(c));
            } else if (v.is_object()) {
                if (v.contains("sign")) e.sign = v.at("sign").get<int>();
                if (v.contains("coords")) {
                    e.coords.clear();
                    for (const json& c : v.at("coords")) e.coords.push_back(int_from_json(c));
                }
            } else {
                throw std::invalid_argument("k value: expected sign, array or object");
            }
            k.push_back(std::move(e));
        }
    }
    return make_picard_data(std::move(pi0), std::move(pi1), std::move(k));
}

json picard_to_json(const PicardData& d) {
    json pi1;
    switch (d.pi1.kind) {
        case Pi1Group::Kind::finitely:
            pi1 = group_to_json(d.pi1.finite_part);
            break;
        case Pi1Group::Kind::circle:
            pi1 = "circle";
            break;
        case Pi1Group::Kind::circle_times:
            pi1 = json{{"circle", true}, {"finite", group_to_json(d.pi1.finite_part)}};
            break;
    }
    json k = json::array();
    for (const Pi1Elem& e : d.k) {
        json coords = json::array();
        for (const Int& c : e.coords) coords.push_back(int_to_json(c));
        if (d.pi1.has_circle())
            k.push_back(json{{"sign", e.sign}, {"coords", std::move(coords)}});
        else
            k.push_back(std::move(coords));
    }
    return json{{"pi0", group_to_json(d.pi0)}, {"pi1", std::move(pi1)}, {"k", std::move(k)}};
}

}  // namespace rstft
