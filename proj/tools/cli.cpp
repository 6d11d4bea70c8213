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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "opuc/json_io.hpp"

namespace opuc::cli {

namespace {

using io::json;

struct Common {
    double tol = 1e-10;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string out;
    int grid = 4096;
};

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        fallback << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InvalidInput("cannot write \"" + path + "\"");
    f << text;
}

void emit(const json& doc, const std::string& path, std::ostream& fallback) {
    write_text(path, doc.dump(2) + "\n", fallback);
}

void emit_clouds(std::span<const ZeroCloud> clouds, const std::string& path, std::ostream& fallback) {
    if (path.empty()) return;
    std::ostringstream os;
    io::write_clouds_csv(os, clouds);
    write_text(path, os.str(), fallback);
}

// Accepts a bare point array or an object holding one under `key`.
std::vector<cplx> load_points(const std::string& arg, const char* key) {
    const json j = io::load(arg);
    if (j.is_object() && j.contains(key)) return io::decode_points(j[key], std::string("/") + key);
    if (j.is_object() && j.contains("points")) return io::decode_points(j["points"], "/points");
    return io::decode_points(j);
}

std::vector<ZeroTarget> load_targets(const std::string& arg) {
    const json j = io::load(arg);
    std::vector<ZeroTarget> out;
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(io::decode_target(j[i], "/" + std::to_string(i)));
    } else if (j.is_object() && j.contains("targets")) {
        for (std::size_t i = 0; i < j["targets"].size(); ++i)
            out.push_back(io::decode_target(j["targets"][i], "/targets/" + std::to_string(i)));
    } else {
        out.push_back(io::decode_target(j));
    }
    if (out.empty()) throw InvalidInput("no targets given");
    return out;
}

SolveOptions solve_options(const Common& c, int restarts) {
    SolveOptions o;
    o.tol = c.tol;
    o.seed = c.seed;
    o.jobs = c.jobs;
    o.max_restarts = restarts;
    return o;
}

json chain_json(const ChainResult& r) {
    json polys = json::array();
    for (const auto& p : r.polys) polys.push_back(io::encode(p));
    return {{"alphas", io::encode_points(r.alphas.values())},
            {"stages_done", r.stages_done},
            {"polys", polys},
            {"prefix_drift", r.prefix_drift}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orthogonal polynomials on the unit circle: recursion, zero prescription and zero-distribution tools"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App* sub, bool solver) {
        sub->add_option("--out", c.out, "Output file (default stdout)");
        if (solver) {
            sub->add_option("--tol", c.tol, "Solver tolerance")->check(CLI::PositiveNumber);
            sub->add_option("--seed", c.seed, "PRNG seed");
            sub->add_option("--jobs", c.jobs, "Parallel restart workers")->check(CLI::Range(1, 256));
        }
    };

    std::string alphas_arg, poly_arg;
    auto* recur = app.add_subcommand("recur", "Convert Verblunsky coefficients to the monic OP or back");
    auto* recur_src = recur->add_option_group("source");
    recur_src->add_option("--alphas", alphas_arg, "AlphaSeq JSON (inline or file)");
    recur_src->add_option("--poly", poly_arg, "Polynomial JSON (inline or file)");
    recur_src->require_option(1);
    bool recur_all = false;
    recur->add_flag("--all", recur_all, "Emit every Phi_k, k = 0..n");
    common(recur, false);

    std::string measure_arg, moments_alphas;
    int order = 8;
    double mass = 1.0;
    bool use_quadrature = false;
    auto* moments = app.add_subcommand("moments", "Trigonometric moments of a measure");
    auto* mom_src = moments->add_option_group("source");
    mom_src->add_option("--measure", measure_arg, "MeasureSpec JSON");
    mom_src->add_option("--alphas", moments_alphas, "AlphaSeq JSON (Bernstein-Szego continuation)");
    mom_src->require_option(1);
    moments->add_option("--order", order, "Highest moment index K")->check(CLI::NonNegativeNumber);
    moments->add_option("--mass", mass, "Total mass for --alphas")->check(CLI::PositiveNumber);
    moments->add_flag("--quadrature", use_quadrature, "Use trapezoid quadrature (Bernstein-Szego only)");
    moments->add_option("--grid", c.grid, "Quadrature grid size (power of two)");
    common(moments, false);

    std::string target_arg, anchors_arg;
    int restarts = 10;
    auto* prescribe = app.add_subcommand("prescribe", "Find a measure whose N-th OP extends the target and vanishes at the anchors");
    prescribe->add_option("--target", target_arg, "Target polynomial JSON")->required();
    prescribe->add_option("--anchors", anchors_arg, "Anchor points JSON")->required();
    prescribe->add_option("--max-restarts", restarts, "Seeded restarts after the straight path")->check(CLI::NonNegativeNumber);
    common(prescribe, true);

    std::string solution_arg;
    auto* verify = app.add_subcommand("verify", "Re-check a stored prescription through quadrature moments and Levinson");
    verify->add_option("--solution", solution_arg, "Solution JSON written by prescribe")->required();
    verify->add_option("--grid", c.grid, "Initial quadrature grid size");
    common(verify, false);

    std::string plan_arg, clouds_out;
    int depth = -1;
    auto* chain = app.add_subcommand("chain", "Chained prescription along a degree plan");
    chain->add_option("--plan", plan_arg, "ChainPlan JSON {degrees, points}")->required();
    chain->add_option("--depth", depth, "Number of stages (default: all)");
    chain->add_option("--clouds", clouds_out, "Zero clouds CSV output");
    common(chain, true);

    std::string targets_arg;
    int stages = 4, moment_order = 2;
    auto* universal = app.add_subcommand("universal", "Chained prescription along factorial degrees towards target distributions");
    universal->add_option("--targets", targets_arg, "Target distribution JSON (one or an array)")->required();
    universal->add_option("--stages", stages, "Largest stage k (degree k!)")->check(CLI::Range(1, 5));
    universal->add_option("--K", moment_order, "Mixed moment order for distances")->check(CLI::NonNegativeNumber);
    universal->add_option("--clouds", clouds_out, "Zero clouds CSV output");
    common(universal, true);

    std::string P_arg, S_arg;
    int nmax = 3, max_halvings = 40;
    auto* limitset = app.add_subcommand("limitset", "Atomic measure whose OP zeros accumulate at prescribed points");
    limitset->add_option("--P", P_arg, "Unit-circle points JSON")->required();
    limitset->add_option("--S", S_arg, "Segment points JSON (S_0 .. S_nmax)")->required();
    limitset->add_option("--nmax", nmax, "Last stage")->check(CLI::Range(0, 6));
    limitset->add_option("--max-halvings", max_halvings, "Cap on epsilon halvings per stage")->check(CLI::NonNegativeNumber);
    limitset->add_option("--clouds", clouds_out, "Zero clouds CSV output");
    common(limitset, false);

    auto* zeros = app.add_subcommand("zeros", "Roots of a monic polynomial");
    auto* zeros_src = zeros->add_option_group("source");
    zeros_src->add_option("--poly", poly_arg, "Polynomial JSON");
    zeros_src->add_option("--alphas", alphas_arg, "AlphaSeq JSON (roots of the last OP)");
    zeros_src->require_option(1);
    common(zeros, false);
    zeros->add_option("--seed", c.seed, "Root finder seed");

    std::string clouds_in;
    double eps = 0.05;
    int tail = 2;
    auto* limitpoints = app.add_subcommand("limitpoints", "Grid estimate of the limit points of a family of zero clouds");
    limitpoints->add_option("--clouds", clouds_in, "Zero clouds CSV")->required()->check(CLI::ExistingFile);
    limitpoints->add_option("--eps", eps, "Grid spacing")->check(CLI::PositiveNumber);
    limitpoints->add_option("--tail", tail, "Recurrence count over the last 2*tail clouds")->check(CLI::PositiveNumber);
    common(limitpoints, false);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    try {
        if (recur->parsed()) {
            if (!alphas_arg.empty()) {
                const auto alphas = io::decode_alphas(io::load(alphas_arg));
                if (recur_all) {
                    json polys = json::array();
                    for (const auto& p : alphas_to_polys(alphas)) polys.push_back(io::encode(p));
                    emit({{"polys", polys}}, c.out, out);
                } else {
                    emit(io::encode(alphas_to_poly(alphas)), c.out, out);
                }
            } else {
                emit(io::encode(poly_to_alphas(io::decode_poly(io::load(poly_arg)))), c.out, out);
            }
            return kOk;
        }
        if (moments->parsed()) {
            MomentSeq m;
            if (!moments_alphas.empty()) {
                m = alphas_to_moments(io::decode_alphas(io::load(moments_alphas)), mass, order);
            } else {
                const auto mu = io::decode_measure(io::load(measure_arg));
                if (use_quadrature) {
                    const auto* bs = std::get_if<BernsteinSzego>(&mu.variant());
                    if (!bs) throw InvalidInput("--quadrature needs a bernstein_szego measure");
                    m = quadrature_moments(bs->zeros, bs->total_mass, order, c.grid);
                } else {
                    m = moments_of(mu, order);
                }
            }
            emit(io::encode(m), c.out, out);
            return kOk;
        }
        if (prescribe->parsed()) {
            PrescriptionProblem problem{io::decode_poly(io::load(target_arg)), ZeroTuple(load_points(anchors_arg, "anchors"))};
            problem.validate();
            try {
                const auto sol = solve(problem, solve_options(c, restarts));
                auto doc = io::encode(sol, problem);
                doc["status"] = "success";
                emit(doc, c.out, out);
                return kOk;
            } catch (const PrescriptionFailure& f) {
                auto doc = io::encode(f.best(), problem);
                doc["status"] = "failure";
                doc["error"] = f.what();
                emit(doc, c.out, out);
                err << "solver failure: " << f.what() << "\n";
                return kSolverFailure;
            }
        }
        if (verify->parsed()) {
            const auto [problem, sol] = io::decode_solution(io::load(solution_arg));
            const auto rep = opuc::verify(problem, sol, c.grid);
            double anchor_max = 0.0;
            for (double r : rep.anchor_residuals) anchor_max = std::max(anchor_max, r);
            // stored residuals are reproduced when the independent path is within 10x (floored at 1e-12)
            const bool coeff_ok = rep.coeff_deviation <= 10.0 * std::max(sol.residual_coeff, 1e-12);
            const bool anchor_ok = anchor_max <= 10.0 * std::max(sol.residual_anchor, 1e-12);
            auto doc = io::encode(rep);
            doc["stored_residual_coeff"] = sol.residual_coeff;
            doc["stored_residual_anchor"] = sol.residual_anchor;
            doc["reproduced"] = coeff_ok && anchor_ok;
            doc["pass"] = coeff_ok && anchor_ok && rep.zeros_inside;
            emit(doc, c.out, out);
            return doc["pass"].get<bool>() ? kOk : kSolverFailure;
        }
        if (chain->parsed()) {
            const auto plan = io::decode_chain_plan(io::load(plan_arg));
            const int d = depth < 0 ? static_cast<int>(plan.degrees.size()) - 1 : depth;
            try {
                const auto r = chain_prescribe(plan, d, solve_options(c, 10));
                auto doc = chain_json(r);
                doc["status"] = "success";
                emit(doc, c.out, out);
                emit_clouds(r.clouds, clouds_out, out);
                return kOk;
            } catch (const ChainFailure& f) {
                auto doc = chain_json(f.partial());
                doc["status"] = "failure";
                doc["error"] = f.what();
                emit(doc, c.out, out);
                emit_clouds(f.partial().clouds, clouds_out, out);
                err << "solver failure: " << f.what() << "\n";
                return kSolverFailure;
            }
        }
        if (universal->parsed()) {
            const auto targets = load_targets(targets_arg);
            try {
                const auto r = universal_measure(targets, stages, solve_options(c, 10), moment_order);
                auto doc = chain_json(r.chain);
                doc["degrees"] = r.degrees;
                doc["target_index"] = r.target_index;
                doc["distances"] = r.distances;
                doc["moment_order"] = r.moment_order;
                json tj = json::array();
                for (const auto& t : targets) tj.push_back(io::encode(t));
                doc["targets"] = tj;
                doc["status"] = "success";
                emit(doc, c.out, out);
                emit_clouds(r.chain.clouds, clouds_out, out);
                return kOk;
            } catch (const ChainFailure& f) {
                auto doc = chain_json(f.partial());
                doc["status"] = "failure";
                doc["error"] = f.what();
                emit(doc, c.out, out);
                emit_clouds(f.partial().clouds, clouds_out, out);
                err << "solver failure: " << f.what() << "\n";
                return kSolverFailure;
            }
        }
        if (limitset->parsed()) {
            const auto P = load_points(P_arg, "P");
            const auto S = load_points(S_arg, "S");
            LimitSetOptions lo;
            lo.max_halvings = max_halvings;
            try {
                const auto r = limitset_measure(P, S, nmax, lo);
                auto doc = io::encode(r);
                doc["status"] = "success";
                emit(doc, c.out, out);
                emit_clouds(r.clouds, clouds_out, out);
                return kOk;
            } catch (const LimitSetFailure& f) {
                auto doc = io::encode(f.partial());
                doc["status"] = "failure";
                doc["failed_stage"] = f.stage();
                doc["error"] = f.what();
                emit(doc, c.out, out);
                emit_clouds(f.partial().clouds, clouds_out, out);
                err << "solver failure: " << f.what() << "\n";
                return kSolverFailure;
            }
        }
        if (zeros->parsed()) {
            const MonicPoly p = !poly_arg.empty() ? io::decode_poly(io::load(poly_arg))
                                                  : alphas_to_poly(io::decode_alphas(io::load(alphas_arg)));
            RootOptions ro;
            ro.seed = c.seed;
            const auto z = p.degree() == 0 ? std::vector<cplx>{} : roots(p, ro);
            emit({{"degree", p.degree()}, {"zeros", io::encode_points(z)}}, c.out, out);
            return kOk;
        }
        if (limitpoints->parsed()) {
            std::ifstream in(clouds_in);
            const auto clouds = io::read_clouds_csv(in, clouds_in);
            if (static_cast<int>(clouds.size()) < tail) throw InvalidInput("fewer clouds than --tail");
            emit({{"points", io::encode_points(limit_points(clouds, eps, tail))}}, c.out, out);
            return kOk;
        }
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const NearBoundary& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const Error& e) {
        err << "failure: " << e.what() << "\n";
        return kSolverFailure;
    }
    return kInvalidInput;
}

}  // namespace opuc::cli
