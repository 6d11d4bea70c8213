/*
   Copyright 2026 The opuc-zeros Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "opuc/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "opuc/errors.hpp"

namespace opuc::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw InvalidInput((path.empty() ? std::string("<root>") : path) + ": " + msg);
}

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) fail(path, "expected a number");
    return j.get<double>();
}

int integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<int>();
}

std::string kind_of(const json& j, const std::string& path) {
    const auto& k = field(j, "kind", path);
    if (!k.is_string()) fail(path + "/kind", "expected a string");
    return k.get<std::string>();
}

template <typename F>
auto rethrow_at(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const InvalidInput& e) {
        fail(path, e.what());
    }
}

}  // namespace

json encode(cplx z) { return json::array({z.real(), z.imag()}); }

json encode_points(std::span<const cplx> pts) {
    json a = json::array();
    for (const auto& z : pts) a.push_back(encode(z));
    return a;
}

json encode(const MonicPoly& p) { return {{"degree", p.degree()}, {"coeffs", encode_points(p.coeffs())}}; }

json encode(const AlphaSeq& a) { return {{"alphas", encode_points(a.values())}}; }

json encode(const MomentSeq& m) { return {{"mass", m.mass()}, {"moments", encode_points(m.values())}}; }

json encode(const MeasureSpec& mu) {
    struct Visitor {
        json operator()(const BernsteinSzego& b) const {
            return {{"kind", "bernstein_szego"}, {"zeros", encode_points(b.zeros.points())}, {"total_mass", b.total_mass}};
        }
        json operator()(const Atomic& a) const {
            json atoms = json::array();
            for (const auto& at : a.atoms) atoms.push_back({{"point", encode(at.point)}, {"weight", at.weight}});
            return {{"kind", "atomic"}, {"atoms", atoms}};
        }
        json operator()(const Mixture& m) const {
            json parts = json::array();
            for (const auto& p : m.parts) parts.push_back({{"scale", p.scale}, {"measure", encode(p.measure)}});
            return {{"kind", "mixture"}, {"parts", parts}};
        }
    };
    return std::visit(Visitor{}, mu.variant());
}

json encode(const OrthogonalityReport& r) { return {{"order", r.order}, {"residual", r.residual}, {"pass", r.pass}}; }

json encode(const PrescriptionProblem& p) {
    return {{"target", encode(p.target)}, {"anchors", encode_points(p.anchors.points())}};
}

json encode(const PrescriptionSolution& s, const PrescriptionProblem& p) {
    json trace = json::array();
    for (const auto& tp : s.trace)
        trace.push_back({{"t", tp.t}, {"newton_iterations", tp.newton_iterations}, {"Z", encode_points(tp.Z)}});
    return {{"problem", encode(p)},
            {"Z_found", encode_points(s.Z_found.points())},
            {"phi_N", encode(s.phi_N)},
            {"alphas", encode(s.alphas)},
            {"residual_coeff", s.residual_coeff},
            {"residual_anchor", s.residual_anchor},
            {"t_final", s.t_final},
            {"attempt", s.attempt},
            {"trace", {{"steps", s.trace.size()}, {"points", trace}}}};
}

json encode(const VerifyReport& r) {
    return {{"coeff_deviation", r.coeff_deviation},
            {"anchor_residuals", r.anchor_residuals},
            {"max_zero_modulus", r.max_zero_modulus},
            {"zeros_inside", r.zeros_inside},
            {"grid", r.grid}};
}

json encode(const ChainPlan& plan) { return {{"degrees", plan.degrees}, {"points", encode_points(plan.prescribed)}}; }

json encode(const ZeroTarget& t) {
    struct Visitor {
        json operator()(const PointMass& p) const { return {{"kind", "point_mass"}, {"point", encode(p.point)}}; }
        json operator()(const UniformCircle& c) const { return {{"kind", "uniform_circle"}, {"radius", c.radius}}; }
        json operator()(const UniformDisk& d) const { return {{"kind", "uniform_disk"}, {"radius", d.radius}}; }
        json operator()(const DiscreteDistribution& d) const {
            return {{"kind", "discrete"}, {"points", encode_points(d.points)}, {"weights", d.weights}};
        }
    };
    return std::visit(Visitor{}, t);
}

json encode(const LimitSetResult& r) {
    json stages = json::array();
    for (const auto& s : r.stages) {
        stages.push_back({{"n", s.n},
                          {"epsilon", s.epsilon},
                          {"beta", s.beta},
                          {"gamma", s.gamma},
                          {"halvings", s.halvings},
                          {"condition_C_distances", s.even_distances},
                          {"condition_B_distances", s.odd_distances},
                          {"wandering_zero", encode(s.wandering_zero)},
                          {"condition_A_distance", s.wandering_distance},
                          {"condition_A_bound", 1.0 / s.n},
                          {"pass", s.pass},
                          {"detail", s.detail}});
    }
    return {{"epsilons", r.epsilons}, {"betas", r.betas}, {"gammas", r.gammas},
            {"tail_bound", r.tail_bound}, {"stages", stages}, {"measure", encode(r.measure)}};
}

cplx decode_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) fail(path, "expected [re, im]");
    return {number(j[0], path + "/0"), number(j[1], path + "/1")};
}

std::vector<cplx> decode_points(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of [re, im] pairs");
    std::vector<cplx> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode_complex(j[i], path + "/" + std::to_string(i)));
    return out;
}

MonicPoly decode_poly(const json& j, const std::string& path) {
    const int degree = integer(field(j, "degree", path), path + "/degree");
    auto coeffs = decode_points(field(j, "coeffs", path), path + "/coeffs");
    if (degree < 0 || static_cast<int>(coeffs.size()) != degree)
        fail(path, "\"coeffs\" must hold exactly \"degree\" entries (leading 1 implied)");
    return MonicPoly(std::move(coeffs));
}

AlphaSeq decode_alphas(const json& j, const std::string& path) {
    const auto& a = j.is_array() ? j : field(j, "alphas", path);
    const std::string p = j.is_array() ? path : path + "/alphas";
    auto pts = decode_points(a, p);
    return rethrow_at(p, [&] { return AlphaSeq(std::move(pts)); });
}

MomentSeq decode_moments(const json& j, const std::string& path) {
    auto m = decode_points(field(j, "moments", path), path + "/moments");
    if (m.empty()) fail(path + "/moments", "needs at least m_0");
    if (j.contains("mass") && std::abs(number(j["mass"], path + "/mass") - m[0].real()) > 1e-12 * std::abs(m[0].real()))
        fail(path + "/mass", "does not match moments[0]");
    return rethrow_at(path, [&] { return MomentSeq(std::move(m)); });
}

MeasureSpec decode_measure(const json& j, const std::string& path) {
    const auto kind = kind_of(j, path);
    if (kind == "bernstein_szego") {
        auto zeros = decode_points(field(j, "zeros", path), path + "/zeros");
        const double mass = j.contains("total_mass") ? number(j["total_mass"], path + "/total_mass") : 1.0;
        return rethrow_at(path, [&] { return MeasureSpec::bernstein_szego(ZeroTuple(std::move(zeros)), mass); });
    }
    if (kind == "atomic") {
        const auto& arr = field(j, "atoms", path);
        if (!arr.is_array()) fail(path + "/atoms", "expected an array");
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string p = path + "/atoms/" + std::to_string(i);
            atoms.push_back({decode_complex(field(arr[i], "point", p), p + "/point"), number(field(arr[i], "weight", p), p + "/weight")});
        }
        return rethrow_at(path, [&] { return MeasureSpec::atomic(std::move(atoms)); });
    }
    if (kind == "mixture") {
        const auto& arr = field(j, "parts", path);
        if (!arr.is_array()) fail(path + "/parts", "expected an array");
        std::vector<MixturePart> parts;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string p = path + "/parts/" + std::to_string(i);
            parts.push_back({number(field(arr[i], "scale", p), p + "/scale"), decode_measure(field(arr[i], "measure", p), p + "/measure")});
        }
        return rethrow_at(path, [&] { return MeasureSpec::mixture(std::move(parts)); });
    }
    fail(path + "/kind", "unknown measure kind \"" + kind + "\"");
}

ChainPlan decode_chain_plan(const json& j, const std::string& path) {
    ChainPlan plan;
    const auto& d = field(j, "degrees", path);
    if (!d.is_array()) fail(path + "/degrees", "expected an array");
    for (std::size_t i = 0; i < d.size(); ++i) plan.degrees.push_back(integer(d[i], path + "/degrees/" + std::to_string(i)));
    plan.prescribed = decode_points(field(j, "points", path), path + "/points");
    return plan;
}

ZeroTarget decode_target(const json& j, const std::string& path) {
    const auto kind = kind_of(j, path);
    if (kind == "point_mass") return PointMass{decode_complex(field(j, "point", path), path + "/point")};
    if (kind == "uniform_circle" || kind == "uniform_disk") {
        const double r = number(field(j, "radius", path), path + "/radius");
        if (!(r >= 0.0 && r <= 1.0)) fail(path + "/radius", "radius must lie in [0, 1]");
        if (kind == "uniform_circle") return UniformCircle{r};
        return UniformDisk{r};
    }
    if (kind == "discrete") {
        DiscreteDistribution d;
        d.points = decode_points(field(j, "points", path), path + "/points");
        const auto& w = field(j, "weights", path);
        if (!w.is_array() || w.size() != d.points.size()) fail(path + "/weights", "expected one weight per point");
        for (std::size_t i = 0; i < w.size(); ++i) {
            d.weights.push_back(number(w[i], path + "/weights/" + std::to_string(i)));
            if (!(d.weights.back() > 0.0)) fail(path + "/weights/" + std::to_string(i), "weights must be positive");
        }
        return d;
    }
    fail(path + "/kind", "unknown target kind \"" + kind + "\"");
}

std::pair<PrescriptionProblem, PrescriptionSolution> decode_solution(const json& j, const std::string& path) {
    const auto& pj = field(j, "problem", path);
    PrescriptionProblem problem{decode_poly(field(pj, "target", path + "/problem"), path + "/problem/target"),
                                rethrow_at(path + "/problem/anchors", [&] {
                                    return ZeroTuple(decode_points(field(pj, "anchors", path + "/problem"), path + "/problem/anchors"));
                                })};
    PrescriptionSolution s;
    s.Z_found = rethrow_at(path + "/Z_found", [&] { return ZeroTuple(decode_points(field(j, "Z_found", path), path + "/Z_found")); });
    s.phi_N = decode_poly(field(j, "phi_N", path), path + "/phi_N");
    s.alphas = decode_alphas(field(j, "alphas", path), path + "/alphas");
    s.residual_coeff = number(field(j, "residual_coeff", path), path + "/residual_coeff");
    s.residual_anchor = number(field(j, "residual_anchor", path), path + "/residual_anchor");
    if (j.contains("t_final")) s.t_final = number(j["t_final"], path + "/t_final");
    if (j.contains("attempt")) s.attempt = integer(j["attempt"], path + "/attempt");
    if (j.contains("trace") && j["trace"].contains("points")) {
        const auto& pts = j["trace"]["points"];
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const std::string p = path + "/trace/points/" + std::to_string(i);
            s.trace.push_back({number(field(pts[i], "t", p), p + "/t"), decode_points(field(pts[i], "Z", p), p + "/Z"),
                               integer(field(pts[i], "newton_iterations", p), p + "/newton_iterations")});
        }
    }
    return {std::move(problem), std::move(s)};
}

json load(const std::string& text_or_path) {
    const auto first = text_or_path.find_first_not_of(" \t\r\n");
    const bool inline_text = first != std::string::npos && (text_or_path[first] == '[' || text_or_path[first] == '{');
    std::string text, source;
    if (inline_text) {
        text = text_or_path;
        source = "<inline>";
    } else {
        std::ifstream in(text_or_path);
        if (!in) throw InvalidInput("cannot open \"" + text_or_path + "\"");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        source = text_or_path;
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(source + ": byte " + std::to_string(e.byte) + ": malformed JSON (" + e.what() + ")");
    }
}

void write_clouds_csv(std::ostream& os, std::span<const ZeroCloud> clouds) {
    os << "re,im,stage,degree\n" << std::setprecision(17);
    for (const auto& c : clouds)
        for (const auto& z : c.zeros) os << z.real() << ',' << z.imag() << ',' << c.stage << ',' << c.degree << '\n';
}

std::vector<ZeroCloud> read_clouds_csv(std::istream& is, const std::string& source) {
    std::vector<ZeroCloud> out;
    std::string line;
    int lineno = 0;
    auto bad = [&](const std::string& msg) { throw InvalidInput(source + ":" + std::to_string(lineno) + ": " + msg); };
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "re,im,stage,degree") bad("expected header re,im,stage,degree");
            continue;
        }
        std::istringstream ls(line);
        std::string cell[4];
        for (int i = 0; i < 4; ++i)
            if (!std::getline(ls, cell[i], ',')) bad("expected 4 comma-separated columns");
        double re, im;
        int stage, degree;
        try {
            std::size_t used = 0;
            re = std::stod(cell[0], &used);
            if (used != cell[0].size()) bad("bad number in column re");
            im = std::stod(cell[1], &used);
            if (used != cell[1].size()) bad("bad number in column im");
            stage = std::stoi(cell[2]);
            degree = std::stoi(cell[3]);
        } catch (const std::logic_error&) {
            bad("unparsable value");
        }
        if (out.empty() || out.back().stage != stage || out.back().degree != degree ||
            static_cast<int>(out.back().zeros.size()) == out.back().degree) {
            out.push_back(ZeroCloud{degree, {}, stage});
        }
        out.back().zeros.emplace_back(re, im);
    }
    for (const auto& c : out)
        if (static_cast<int>(c.zeros.size()) != c.degree)
            throw InvalidInput(source + ": cloud (stage " + std::to_string(c.stage) + ", degree " + std::to_string(c.degree) +
                               ") has " + std::to_string(c.zeros.size()) + " rows");
    return out;
}

}  // namespace opuc::io
