// geovec: homogeneous-geodesic toolkit for metric Lie algebras and reductive
// homogeneous spaces. Subcommand style; all runs are deterministic for a
// fixed seed. Exit codes: 0 success / verification pass, 1 verification
// failure, 2 input or usage error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "geovec/catalog.hpp"
#include "geovec/charpoly.hpp"
#include "geovec/closure.hpp"
#include "geovec/connection.hpp"
#include "geovec/flow.hpp"
#include "geovec/geodesy.hpp"
#include "geovec/homspace.hpp"
#include "geovec/parse.hpp"

using namespace geovec;

namespace {

struct RunConfig {
    std::string input;
    std::string backend = "exact";
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::string out;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(const Rat& q) { return to_string(q); }

Vec<Rat> parse_vector_exact(const std::string& text, int dim) {
    std::istringstream is(text);
    std::string tok;
    Vec<Rat> v;
    while (is >> tok) {
        auto q = parse_rat(tok);
        if (!q) throw std::runtime_error("bad vector component '" + tok + "'");
        v.push_back(*q);
    }
    if (static_cast<int>(v.size()) != dim)
        throw std::runtime_error("vector needs " + std::to_string(dim) + " components");
    return v;
}

// the reference zero-set families claimed for the 6-dim frame metric; the
// parameter d is read back from the stored orthonormal frame
std::vector<AffineFamily<Rat>> reference_families(const Rat& d) {
    auto v = [](std::initializer_list<Rat> l) { return Vec<Rat>(l); };
    std::vector<AffineFamily<Rat>> fams;
    fams.push_back({"f1", zero_vec<Rat>(6),
                    {v({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), d}), basis_vec<Rat>(6, 3),
                     basis_vec<Rat>(6, 4)}});
    fams.push_back({"f2", zero_vec<Rat>(6),
                    {v({Rat(1), Rat(0), Rat(0), Rat(0), Rat(2), d}),
                     v({Rat(0), Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)}),
                     v({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)}),
                     v({Rat(0), Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)})}});
    fams.push_back({"f3", zero_vec<Rat>(6),
                    {v({d, Rat(1), Rat(1), d, d, Rat(0)}), basis_vec<Rat>(6, 5)}});
    return fams;
}

std::optional<AffineFamily<Rat>> named_family(const std::string& name,
                                              const MetricLieAlgebra<Rat>& m) {
    if (name != "f1" && name != "f2" && name != "f3") return std::nullopt;
    if (m.dim() != 6 || !m.metric.orthonormal_frame())
        throw std::runtime_error("named families need the 6-dim lower-triangular frame metric");
    Rat d = (*m.metric.orthonormal_frame())(5, 5);
    for (auto& f : reference_families(d))
        if (f.name == name) return f;
    return std::nullopt;
}

// families given inline: directions separated by ';', an optional leading
// "base:" entry names the affine base point
template <typename S>
AffineFamily<S> parse_family(const std::string& text, int dim, const std::string& name) {
    AffineFamily<S> fam;
    fam.name = name;
    fam.base = zero_vec<S>(dim);
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        bool is_base = false;
        auto colon = part.find("base:");
        if (colon != std::string::npos) {
            is_base = true;
            part = part.substr(colon + 5);
        }
        auto ve = parse_vector_exact(part, dim);
        Vec<S> v;
        for (const auto& q : ve) {
            if constexpr (scalar_traits<S>::is_exact) v.push_back(q);
            else v.push_back(to_double(q));
        }
        if (is_base) fam.base = v;
        else fam.directions.push_back(v);
    }
    if (fam.directions.empty()) throw std::runtime_error("family needs at least one direction");
    return fam;
}

ParsedModel load(const RunConfig& cfg) {
    if (cfg.input.empty()) throw std::runtime_error("--input is required for this subcommand");
    return parse_input_file(cfg.input);
}

MetricLieAlgebra<Rat> metric_model(const ParsedModel& model) {
    if (!model.metric) throw std::runtime_error("input file carries no metric section");
    return {model.algebra, *model.metric};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    return f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homogeneous geodesics on metric Lie algebras"};
    app.set_help_flag("--help", "print usage");  // frees -h for the step flag
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--input", cfg.input, "algebra/metric definition file");
    app.add_option("--backend", cfg.backend, "exact | float")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--seed", cfg.seed, "seed for all randomized operations (default 0)");
    app.add_option("--tol", cfg.tol, "tolerance for float comparisons")->check(CLI::PositiveNumber);
    app.add_option("--out", cfg.out, "output path for CSV reports");

    // --- xi ---
    auto* cmd_xi = app.add_subcommand("xi", "evaluate the geodesic-vector map at X")->fallthrough();
    std::string xi_x;
    cmd_xi->add_option("--x", xi_x, "vector components")->required();

    // --- geodesic-vectors ---
    auto* cmd_gv = app.add_subcommand("geodesic-vectors", "zero-set search by Newton restarts")->fallthrough();
    int gv_restarts = 200;
    std::vector<std::string> gv_families;
    cmd_gv->add_option("--restarts", gv_restarts, "number of random starts");
    cmd_gv->add_option("--family", gv_families, "family to cluster against (directions ';'-separated)");

    // --- verify-family ---
    auto* cmd_vf = app.add_subcommand("verify-family", "check that xi vanishes on a family")->fallthrough();
    std::vector<std::string> vf_families;
    int vf_samples = 50;
    cmd_vf->add_option("--family", vf_families, "family directions, ;-separated (repeatable)")->required();
    cmd_vf->add_option("--samples", vf_samples, "random points per family");

    // --- geodesic-basis ---
    auto* cmd_gb = app.add_subcommand("geodesic-basis", "search for a basis of geodesic vectors")->fallthrough();
    int gb_restarts = 300;
    cmd_gb->add_option("--restarts", gb_restarts, "newton restarts");

    // --- curvature ---
    auto* cmd_curv = app.add_subcommand("curvature", "sectional curvature of a coordinate plane")->fallthrough();
    std::vector<int> curv_plane;
    cmd_curv->add_option("--plane", curv_plane, "two 1-based basis indices")->expected(2)->required();

    // --- ricci ---
    auto* cmd_ricci = app.add_subcommand("ricci", "Ricci operator matrix")->fallthrough();

    // --- ricci-discriminant ---
    auto* cmd_disc = app.add_subcommand("ricci-discriminant",
                                        "exact discriminant of the Ricci characteristic polynomial")->fallthrough();
    std::string disc_d;
    cmd_disc->add_option("--d", disc_d,
                         "rebuild the 6-dim frame-family metric with this parameter (rational)");

    // --- totally-geodesic ---
    auto* cmd_tg = app.add_subcommand("totally-geodesic", "second-fundamental-form test of a subalgebra")->fallthrough();
    std::vector<std::string> tg_sub;
    cmd_tg->add_option("--sub", tg_sub, "spanning vectors (repeatable)")->required();

    // --- flow ---
    auto* cmd_flow = app.add_subcommand("flow", "integrate the body-velocity geodesic flow")->fallthrough();
    std::string flow_v0;
    double flow_T = 1.0, flow_h = 1e-3;
    cmd_flow->add_option("--v0", flow_v0, "initial body velocity")->required();
    cmd_flow->add_option("--T", flow_T, "time horizon")->check(CLI::PositiveNumber);
    cmd_flow->add_option("--h", flow_h, "step size")->check(CLI::PositiveNumber);

    // --- closure ---
    auto* cmd_cl = app.add_subcommand("closure", "classify the closure of exp(tX)")->fallthrough();
    std::string cl_x;
    long cl_bound = 1000000;
    double cl_density = 0;
    cmd_cl->add_option("--x", cl_x, "direction in algebra coordinates")->required();
    cmd_cl->add_option("--bound", cl_bound, "integer-relation coefficient bound");
    cmd_cl->add_option("--density", cl_density, "sample horizon for the covering check");

    // --- go-check ---
    auto* cmd_go = app.add_subcommand("go-check", "sample the GO criterion on a reductive space")->fallthrough();
    int go_samples = 100;
    cmd_go->add_option("--samples", go_samples, "random directions in m");

    CLI11_PARSE(app, argc, argv);

    try {
        // ---------- xi ----------
        if (cmd_xi->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model);
            auto X = parse_vector_exact(xi_x, m.dim());
            if (cfg.backend == "exact") {
                auto v = xi(m, X);
                std::string sep;
                for (const auto& c : v) { std::cout << sep << fmt(c); sep = " "; }
                std::cout << "\n";
            } else {
                auto v = xi(m.to_float(), to_float(X));
                std::string sep;
                for (double c : v) { std::cout << sep << fmt(c); sep = " "; }
                std::cout << "\n";
            }
            return 0;
        }

        // ---------- geodesic-vectors ----------
        if (cmd_gv->parsed()) {
            auto model = load(cfg);
            auto mq = metric_model(model);
            auto m = mq.to_float();
            std::vector<AffineFamily<double>> fams;
            for (std::size_t i = 0; i < gv_families.size(); ++i) {
                if (auto named = named_family(gv_families[i], mq)) {
                    AffineFamily<double> g{named->name, to_float(named->base), {}};
                    for (const auto& dir : named->directions) g.directions.push_back(to_float(dir));
                    fams.push_back(std::move(g));
                } else {
                    fams.push_back(parse_family<double>(gv_families[i], m.dim(),
                                                        "f" + std::to_string(i + 1)));
                }
            }
            auto rep = zero_set_solve(m, gv_restarts, cfg.seed, 1e-12, fams);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!cfg.out.empty()) { file = open_out(cfg.out); os = &file; }
            *os << "zero_id,family";
            for (int i = 0; i < m.dim(); ++i) *os << ",x" << i + 1;
            *os << ",residual\n";
            for (std::size_t z = 0; z < rep.zeros.size(); ++z) {
                const auto& zz = rep.zeros[z];
                *os << z + 1 << ","
                    << (zz.family >= 0 ? fams[zz.family].name : std::string("-"));
                for (double c : zz.x) *os << "," << fmt(c);
                *os << "," << fmt(zz.residual) << "\n";
            }
            std::cerr << rep.converged << "/" << rep.restarts << " restarts converged, "
                      << rep.zeros.size() << " distinct zeros\n";
            return 0;
        }

        // ---------- verify-family ----------
        if (cmd_vf->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model);
            bool all = true;
            for (std::size_t i = 0; i < vf_families.size(); ++i) {
                AffineFamily<Rat> fam;
                if (auto named = named_family(vf_families[i], m)) fam = *named;
                else fam = parse_family<Rat>(vf_families[i], m.dim(), "f" + std::to_string(i + 1));
                bool ok = verify_family(m, fam, vf_samples, cfg.seed);
                std::cout << fam.name << ": " << (ok ? "geodesic (exact)" : "NOT geodesic") << "\n";
                all = all && ok;
            }
            return all ? 0 : 1;
        }

        // ---------- geodesic-basis ----------
        if (cmd_gb->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model).to_float();
            auto basis = geodesic_basis_search(m, gb_restarts, cfg.seed, cfg.tol);
            if (!basis) {
                std::cout << "no geodesic basis found within the restart budget\n";
                return 1;
            }
            for (const auto& v : *basis) {
                std::string sep;
                for (double c : v) { std::cout << sep << fmt(c); sep = " "; }
                std::cout << "\n";
            }
            return 0;
        }

        // ---------- curvature ----------
        if (cmd_curv->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model);
            int i = curv_plane[0] - 1, j = curv_plane[1] - 1;
            if (i < 0 || j < 0 || i >= m.dim() || j >= m.dim() || i == j)
                throw std::runtime_error("--plane needs two distinct 1-based basis indices");
            if (cfg.backend == "exact") {
                ConnectionTable<Rat> conn(m);
                std::cout << fmt(conn.sectional(basis_vec<Rat>(m.dim(), i), basis_vec<Rat>(m.dim(), j)))
                          << "\n";
            } else {
                auto mf = m.to_float();
                ConnectionTable<double> conn(mf);
                std::cout << fmt(conn.sectional(basis_vec<double>(m.dim(), i),
                                                basis_vec<double>(m.dim(), j)))
                          << "\n";
            }
            return 0;
        }

        // ---------- ricci ----------
        if (cmd_ricci->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model);
            ConnectionTable<Rat> conn(m);
            auto ric = conn.ricci_operator();
            for (int i = 0; i < ric.rows; ++i) {
                std::string sep;
                for (int j = 0; j < ric.cols; ++j) {
                    std::cout << sep << (cfg.backend == "exact" ? fmt(ric(i, j)) : fmt(to_double(ric(i, j))));
                    sep = " ";
                }
                std::cout << "\n";
            }
            return 0;
        }

        // ---------- ricci-discriminant ----------
        if (cmd_disc->parsed()) {
            if (cfg.backend == "float")
                throw std::runtime_error("ricci-discriminant requires the exact backend");
            auto model = load(cfg);
            auto m = metric_model(model);
            std::optional<Rat> dval;
            if (!disc_d.empty()) {
                auto q = parse_rat(disc_d);
                if (!q || !(*q > 0)) throw std::runtime_error("--d must be a positive rational");
                dval = *q;
                if (m.dim() != 6)
                    throw std::runtime_error("--d rebuilds the 6-dimensional frame family only");
                m = MetricLieAlgebra<Rat>(model.algebra,
                                          from_lower_triangular(catalog::su2su2_frame(*dval)));
            }
            ConnectionTable<Rat> conn(m);
            Rat D = charpoly_discriminant(conn.ricci_operator());
            std::cout << "discriminant " << fmt(D) << "\n";
            std::cout << "float " << fmt(to_double(D)) << "\n";
            if (dval) {
                // slope of log D between d and d/10 (the frame family decays
                // with a fixed power law as d -> 0)
                auto m2 = MetricLieAlgebra<Rat>(
                    model.algebra, from_lower_triangular(catalog::su2su2_frame(Rat(*dval / 10))));
                ConnectionTable<Rat> conn2(m2);
                Rat D2 = charpoly_discriminant(conn2.ricci_operator());
                double num = std::log(std::fabs(to_double(D2))) - std::log(std::fabs(to_double(D)));
                double den = std::log(to_double(*dval) / 10) - std::log(to_double(*dval));
                std::cout << "log-slope " << fmt(num / den) << " between d and d/10\n";
            }
            return 0;
        }

        // ---------- totally-geodesic ----------
        if (cmd_tg->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model);
            Subalgebra<Rat> sub;
            for (const auto& s : tg_sub) sub.span.push_back(parse_vector_exact(s, m.dim()));
            if (!sub.closed_under_bracket(model.algebra))
                throw std::runtime_error("the given span is not closed under the bracket");
            ConnectionTable<Rat> conn(m);
            bool tg = is_totally_geodesic(conn, sub);
            // report the worst second-fundamental-form norm as a float
            double worst = 0;
            for (int i = 0; i < sub.dim(); ++i)
                for (int j = i; j < sub.dim(); ++j) {
                    auto a = second_fundamental_form(conn, sub, sub.span[i], sub.span[j]);
                    worst = std::max(worst, norm2(to_float(a)));
                }
            std::cout << (tg ? "totally geodesic" : "NOT totally geodesic")
                      << " (max |alpha| = " << fmt(worst) << ")\n";
            return tg ? 0 : 1;
        }

        // ---------- flow ----------
        if (cmd_flow->parsed()) {
            auto model = load(cfg);
            auto m = metric_model(model).to_float();
            auto rho = realization::for_algebra(model.algebra.name());
            auto V0 = to_float(parse_vector_exact(flow_v0, m.dim()));
            auto traj = integrate(m, rho, V0, flow_T, flow_h);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!cfg.out.empty()) { file = open_out(cfg.out); os = &file; }
            *os << "t";
            for (int i = 0; i < m.dim(); ++i) *os << ",v" << i + 1;
            for (int i = 0; i < rho.matrix_dim; ++i)
                for (int j = 0; j < rho.matrix_dim; ++j) *os << ",re_g" << i + 1 << j + 1 << ",im_g" << i + 1 << j + 1;
            *os << ",energy,unitarity_defect\n";
            for (std::size_t k = 0; k < traj.times.size(); ++k) {
                *os << fmt(traj.times[k]);
                for (double v : traj.velocities[k]) *os << "," << fmt(v);
                const auto& g = traj.elements[k];
                for (int i = 0; i < g.n; ++i)
                    for (int j = 0; j < g.n; ++j)
                        *os << "," << fmt(g(i, j).real()) << "," << fmt(g(i, j).imag());
                *os << "," << fmt(m.metric.ip(traj.velocities[k], traj.velocities[k])) << ","
                    << fmt(unitarity_defect(g)) << "\n";
            }
            std::cerr << "energy drift " << fmt(traj.energy_drift) << ", unitarity defect "
                      << fmt(traj.max_unitarity_defect) << "\n";
            return 0;
        }

        // ---------- closure ----------
        if (cmd_cl->parsed()) {
            auto model = load(cfg);
            auto rho = realization::for_algebra(model.algebra.name());
            auto X = to_float(parse_vector_exact(cl_x, model.algebra.dim()));
            auto rep = classify_closure(rho, X, cl_bound, cfg.tol);
            std::cout << "kind " << to_string(rep.kind);
            if (rep.kind == OrbitKind::torus) std::cout << " T" << rep.torus_dim;
            std::cout << "\nfrequencies";
            for (double f : rep.frequencies) std::cout << " " << fmt(f);
            std::cout << "\nrelations " << rep.relations.size() << " (bound " << rep.coeff_bound
                      << ", tol " << fmt(rep.tol) << ")\n";
            for (const auto& r : rep.relations) {
                std::string sep;
                for (long c : r) { std::cout << sep << c; sep = " "; }
                std::cout << "\n";
            }
            if (cl_density > 0 && (rep.kind == OrbitKind::torus || rep.kind == OrbitKind::circle)) {
                auto d = density_check(rho, X, rep, cl_density, 0.05, 100, !cfg.out.empty());
                std::cout << "covering defect " << fmt(d.covering_defect) << " on a " << d.grid
                          << "^" << d.dims << " grid\n";
                if (!cfg.out.empty()) {
                    auto f = open_out(cfg.out);
                    f << "angle1,angle2\n";
                    for (const auto& [a, b] : d.samples) f << fmt(a) << "," << fmt(b) << "\n";
                }
            }
            return 0;
        }

        // ---------- go-check ----------
        if (cmd_go->parsed()) {
            auto model = load(cfg);
            if (!model.reductive)
                throw std::runtime_error("go-check needs hsubalgebra/mcomplement sections");
            auto rep = go_sample_check(*model.reductive, go_samples, cfg.seed, cfg.tol);
            std::cout << (rep.all_pass ? "GO evidence: all residuals within tolerance"
                                       : "counterexample direction found")
                      << "\nmax residual " << fmt(rep.max_residual) << " over " << rep.samples
                      << " samples\n";
            if (!rep.all_pass && !rep.worst_X.empty()) {
                std::cout << "worst X:";
                for (const auto& c : rep.worst_X) std::cout << " " << fmt(c);
                std::cout << "\n";
            }
            return rep.all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
