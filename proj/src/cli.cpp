#include "wedgecert/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wedgecert/lattice.hpp"
#include "wedgecert/matrix_io.hpp"
#include "wedgecert/mu.hpp"
#include "wedgecert/subsets.hpp"
#include "wedgecert/sunit.hpp"

namespace wedgecert {

namespace {

// Key-value report: porcelain mode prints "key=value" lines verbatim, the
// default mode prints them as aligned prose.
class Report {
public:
    void add(std::string key, std::string value) {
        rows_.emplace_back(std::move(key), std::move(value));
    }

    void render(std::ostream& out, bool porcelain) const {
        if (porcelain) {
            for (const auto& [k, v] : rows_)
                out << k << '=' << v << '\n';
            return;
        }
        std::size_t width = 0;
        for (const auto& [k, v] : rows_)
            width = std::max(width, k.size());
        for (const auto& [k, v] : rows_)
            out << "  " << std::left << std::setw(static_cast<int>(width) + 1) << (k + ":")
                << ' ' << v << '\n';
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_rational(const Rational& r) {
    return rational_str(r) + " (" + fmt_double(to_double(r)) + ")";
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t h) {
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Digest of the canonical argument list plus the bytes of every input file.
std::string input_digest(const std::vector<std::string>& args,
                         const std::vector<std::string>& files) {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& a : args) {
        h = fnv1a(a, h);
        h = fnv1a(std::string_view("\x1f", 1), h);
    }
    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        h = fnv1a(buf.str(), h);
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty())
                out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::string witness_str(const std::vector<ExtremePoint>& witness, char sep) {
    std::string s;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i)
            s += sep;
        s += witness[i].str();
    }
    return s;
}

Rational parse_rational_flag(const std::string& token, const std::string& flag) {
    auto r = parse_rational(token);
    if (!r)
        throw ParseError("flag " + flag + " needs a rational value, got '" + token + "'");
    return *r;
}

struct Invocation {
    std::vector<std::string> args;
    bool porcelain = false;
    bool violated = false; // a checked inequality failed: exit status 2
};

void cmd_wedge_norm(const std::string& matrix_path, Invocation& inv, Report& rep) {
    const RationalMatrix m = read_matrix_file(matrix_path);
    const WedgeCoordinates w = wedge_coordinates(m);
    rep.add("rows", std::to_string(w.n));
    rep.add("cols", std::to_string(w.l));
    for (const auto& [subset, value] : w.coords) {
        std::string key = "minor";
        for (int member : subset.members())
            key += "_" + std::to_string(member);
        rep.add(key, rational_str(value));
    }
    rep.add("l1", rational_str(w.l1));
    rep.add("provenance", "exact");
    (void)inv;
}

void cmd_mu(int grade, int dim, const std::string& budget_token, int workers, bool no_cache,
            std::string cache_dir, Invocation& inv, Report& rep) {
    MuOptions opts;
    if (!budget_token.empty()) {
        opts.budget = Integer(budget_token);
        if (opts.budget < 1)
            throw ParseError("budget must be positive");
    }
    opts.workers = workers;

    if (cache_dir.empty()) {
        if (const char* env = std::getenv("WEDGECERT_CACHE_DIR"))
            cache_dir = env;
    }
    const bool use_cache = !no_cache && !cache_dir.empty();
    std::string provenance = "exact-search";
    std::optional<MuResult> res;
    if (use_cache) {
        res = MuCache(cache_dir).lookup(grade, dim);
        if (res)
            provenance = "exact-cache";
    }
    if (!res) {
        res = mu_exact(grade, dim, opts);
        if (use_cache)
            MuCache(cache_dir).store(*res, opts.budget);
    }
    rep.add("grade", std::to_string(grade));
    rep.add("dim", std::to_string(dim));
    rep.add("value", res->value.str());
    rep.add("witness", witness_str(res->witness, inv.porcelain ? ',' : ' '));
    rep.add("bound_binomial", res->binom_bound.str());
    rep.add("bound_power", res->bound_2l.str());
    if (res->bound_ratio)
        rep.add("bound_ratio", rational_str(*res->bound_ratio));
    rep.add("provenance", provenance);
}

void cmd_verify(const std::string& matrix_path, const std::string& theorem,
                const std::string& tol_token, Invocation& inv, Report& rep) {
    const RationalMatrix m = read_matrix_file(matrix_path);
    std::vector<RationalVector> vectors;
    for (std::size_t j = 0; j < m.cols(); ++j)
        vectors.push_back(m.column(j));
    BoundReport bound;
    if (theorem == "2.1") {
        bound = verify_wedge_bound(vectors);
    } else if (theorem == "1.1") {
        const Rational tol =
            tol_token.empty() ? Rational(0) : parse_rational_flag(tol_token, "--tolerance");
        bound = verify_diagonal_bound(vectors, tol);
    } else {
        throw ParseError("unknown theorem selector '" + theorem + "' (use 2.1 or 1.1)");
    }
    rep.add("theorem", theorem);
    rep.add("vectors", std::to_string(m.cols()));
    rep.add("dim", std::to_string(m.rows()));
    rep.add("regime", bound.regime);
    rep.add("lhs", rational_str(bound.lhs));
    rep.add("rhs", rational_str(bound.rhs));
    rep.add("constant", rational_str(bound.constant_used));
    rep.add("satisfied", bound.satisfied ? "true" : "false");
    rep.add("tight", bound.lhs == bound.rhs ? "true" : "false");
    rep.add("provenance", "exact");
    if (!bound.satisfied)
        inv.violated = true;
}

void cmd_partition(const std::string& system_path, Invocation& inv, Report& rep) {
    const auto pairs = read_pairs_file(system_path);
    int n = 0;
    for (const auto& [a, b] : pairs)
        n = std::max({n, a, b});
    // Orient each pair as a difference vector to reuse the matrix checks.
    RationalMatrix m(static_cast<std::size_t>(n), pairs.size());
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        m.at(static_cast<std::size_t>(pairs[j].first) - 1, j) = Rational(1);
        m.at(static_cast<std::size_t>(pairs[j].second) - 1, j) = Rational(-1);
    }
    const PairSystem sys = pair_system_from_columns(m);
    const MinimalPartition part = minimal_partition(sys);
    rep.add("ground_set", std::to_string(n));
    rep.add("pairs", std::to_string(pairs.size()));
    rep.add("blocks", std::to_string(part.blocks.size()));
    for (std::size_t i = 0; i < part.blocks.size(); ++i)
        rep.add("block_" + std::to_string(i + 1), mask_str(part.blocks[i]));
    const RankRelation rel = rank_relation(m);
    rep.add("n_minus_l", std::to_string(rel.n_minus_l));
    rep.add("rank_equality", rel.equal ? "true" : "false");
    rep.add("provenance", "exact");
    (void)inv;
}

void add_minima(const MinimaResult& res, const NormBallSpec& spec, Report& rep) {
    for (std::size_t j = 0; j < res.lambdas.size(); ++j)
        rep.add("lambda_" + std::to_string(j + 1), rational_str(res.lambdas[j]));
    for (std::size_t j = 0; j < res.minimizers.size(); ++j) {
        std::string s;
        for (std::size_t k = 0; k < res.minimizers[j].size(); ++k) {
            if (k)
                s += ',';
            s += res.minimizers[j][k].str();
        }
        rep.add("minimizer_" + std::to_string(j + 1), s);
    }
    Rational lambda_product(1), norm_product(1);
    for (std::size_t j = 0; j < res.lambdas.size(); ++j) {
        lambda_product *= res.lambdas[j];
        norm_product *= l1_norm(res.reduced[j]);
    }
    const Rational wedge = wedge_coordinates(spec.matrix()).l1;
    const Rational bound = Rational(factorial(static_cast<unsigned>(spec.grade()))) * wedge;
    rep.add("lambda_product", rational_str(lambda_product));
    rep.add("reduced_norm_product", rational_str(norm_product));
    rep.add("wedge_l1", rational_str(wedge));
    rep.add("product_bound", rational_str(bound));
    rep.add("index", res.index.str());
    rep.add("index_bound", factorial(static_cast<unsigned>(spec.grade())).str());
}

void add_volume_report(const VolumeReport& vol, Report& rep) {
    rep.add("dual_volume", fmt_rational(vol.dual_volume));
    if (vol.primal_volume)
        rep.add("primal_volume", fmt_rational(*vol.primal_volume));
    rep.add("reisner_lhs", fmt_rational(vol.reisner_lhs));
    if (vol.reisner_ok)
        rep.add("reisner_ok", *vol.reisner_ok ? "true" : "false");
    rep.add("minkowski_low", fmt_rational(vol.minkowski_low));
    rep.add("minkowski_high", fmt_rational(vol.minkowski_high));
    if (vol.minkowski_ok)
        rep.add("minkowski_ok", *vol.minkowski_ok ? "true" : "false");
}

void cmd_reduce(const std::string& matrix_path, const std::string& report_kind,
                const std::string& budget_token, int workers, Invocation& inv, Report& rep) {
    if (!report_kind.empty() && report_kind != "volumes")
        throw ParseError("unknown report kind '" + report_kind + "' (use volumes)");
    LatticeOptions opts;
    if (!budget_token.empty()) {
        opts.node_budget = Integer(budget_token);
        if (opts.node_budget < 1)
            throw ParseError("budget must be positive");
    }
    opts.workers = workers;
    const NormBallSpec spec(read_matrix_file(matrix_path));
    const MinimaResult res = reduce_basis(spec, opts);
    rep.add("rows", std::to_string(spec.ambient()));
    rep.add("cols", std::to_string(spec.grade()));
    add_minima(res, spec, rep);
    if (report_kind == "volumes")
        add_volume_report(reisner_minkowski_report(spec, opts), rep);
    rep.add("provenance", "exact");
    (void)inv;
}

void cmd_volume(const std::string& matrix_path, std::uint64_t samples, std::uint64_t seed,
                const std::string& budget_token, Invocation& inv, Report& rep) {
    LatticeOptions opts;
    if (!budget_token.empty()) {
        opts.node_budget = Integer(budget_token);
        if (opts.node_budget < 1)
            throw ParseError("budget must be positive");
    }
    const NormBallSpec spec(read_matrix_file(matrix_path));
    rep.add("rows", std::to_string(spec.ambient()));
    rep.add("cols", std::to_string(spec.grade()));
    if (spec.grade() <= 3) {
        add_volume_report(reisner_minkowski_report(spec, opts), rep);
        rep.add("provenance", "exact");
    } else {
        rep.add("dual_volume", fmt_rational(dual_volume(spec)));
        rep.add("provenance", "exact-dual-only");
    }
    if (samples > 0) {
        const Rational estimate = primal_volume_estimate(spec, samples, seed);
        rep.add("primal_estimate", fmt_rational(estimate));
        rep.add("samples", std::to_string(samples));
        rep.add("seed", std::to_string(seed));
    }
    (void)inv;
}

void cmd_regulator(const std::string& table_path, const std::string& basis_csv,
                   double tolerance, Invocation& inv, Report& rep) {
    const EmbeddingTable table = load_embedding(table_path, tolerance);
    const auto labels = split_csv(basis_csv);
    const RegulatorResult res = regulator_from_basis(table, labels);
    rep.add("rank", std::to_string(table.rank()));
    rep.add("degree", std::to_string(table.global_degree));
    for (const auto& label : labels)
        rep.add("height_" + label,
                fmt_double(unit_height(table.find(label), table.global_degree)));
    rep.add("wedge_l1", fmt_double(res.wedge_l1));
    rep.add("regulator", fmt_double(res.regulator));
    rep.add("relative_scale", fmt_double(res.relative_scale));
    rep.add("provenance", "float");
    (void)inv;
}

void cmd_conjecture(const std::string& table_path, const std::string& units_csv,
                    double tolerance, Invocation& inv, Report& rep) {
    const EmbeddingTable table = load_embedding(table_path, tolerance);
    const auto labels = split_csv(units_csv);
    const ConjectureReport report = conjecture_report(table, labels);
    rep.add("q", std::to_string(report.q));
    rep.add("r", std::to_string(report.r));
    rep.add("wedge_l1", fmt_double(report.wedge_l1));
    rep.add("height_product", fmt_double(report.product_l1));
    rep.add("sandwich_rhs", fmt_double(report.sandwich_rhs));
    rep.add("wedge_over_product", fmt_double(report.wedge_over_product));
    rep.add("sandwich_ok", report.sandwich_ok ? "true" : "false");
    rep.add("ratio_le_one", report.ratio_le_one ? "true" : "false");
    rep.add("provenance", "float");
    if (!report.sandwich_ok || !report.ratio_le_one)
        inv.violated = true;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact exterior-product norm bounds, lattice reduction and regulator reports"};
    app.require_subcommand(1);

    Invocation inv;
    inv.args = args;

    // wedge-norm
    auto* wedge = app.add_subcommand("wedge-norm", "Grassmann coordinates and their l1 norm");
    std::string wn_matrix;
    bool wn_porcelain = false;
    wedge->add_option("--matrix", wn_matrix, "matrix file, one row per line")->required();
    wedge->add_flag("--porcelain", wn_porcelain, "machine-readable key=value output");

    // mu
    auto* mu = app.add_subcommand("mu", "extremal wedge norm over unit-ball extreme points");
    int mu_grade = 0, mu_dim = 0, mu_workers = 1;
    std::string mu_budget, mu_cache_dir;
    bool mu_no_cache = false, mu_porcelain = false;
    mu->add_option("--grade", mu_grade, "number of vectors L")->required();
    mu->add_option("--dim", mu_dim, "ambient dimension N")->required();
    mu->add_option("--budget", mu_budget, "minor-evaluation budget");
    mu->add_option("--workers", mu_workers, "parallel shard workers");
    mu->add_option("--cache-dir", mu_cache_dir, "result cache directory");
    mu->add_flag("--no-cache", mu_no_cache, "bypass the result cache");
    mu->add_flag("--porcelain", mu_porcelain, "machine-readable key=value output");

    // verify
    auto* verify = app.add_subcommand("verify", "check a wedge-norm inequality on a matrix");
    std::string v_matrix, v_theorem, v_tol;
    bool v_porcelain = false;
    verify->add_option("--matrix", v_matrix, "matrix file; columns are the vectors")
        ->required();
    verify->add_option("--theorem", v_theorem, "2.1 (general) or 1.1 (diagonal)")->required();
    verify->add_option("--tolerance", v_tol, "diagonal residual tolerance (rational)");
    verify->add_flag("--porcelain", v_porcelain, "machine-readable key=value output");

    // partition
    auto* partition = app.add_subcommand("partition", "minimal blocks of a pair system");
    std::string p_system;
    bool p_porcelain = false;
    partition->add_option("--system", p_system, "pair file, one 'm n' per line")->required();
    partition->add_flag("--porcelain", p_porcelain, "machine-readable key=value output");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "successive-minima basis reduction");
    std::string r_matrix, r_report, r_budget;
    int r_workers = 1;
    bool r_porcelain = false;
    reduce->add_option("--matrix", r_matrix, "matrix file")->required();
    reduce->add_option("--report", r_report, "extra report: volumes");
    reduce->add_option("--budget", r_budget, "lattice-point budget");
    reduce->add_option("--workers", r_workers, "parallel stripe workers");
    reduce->add_flag("--porcelain", r_porcelain, "machine-readable key=value output");

    // volume
    auto* volume = app.add_subcommand("volume", "norm-ball volumes and sandwich checks");
    std::string vol_matrix, vol_budget;
    std::uint64_t vol_samples = 0, vol_seed = 0;
    bool vol_porcelain = false;
    volume->add_option("--matrix", vol_matrix, "matrix file")->required();
    volume->add_option("--samples", vol_samples, "Monte Carlo samples for the estimate");
    volume->add_option("--seed", vol_seed, "Monte Carlo seed");
    volume->add_option("--budget", vol_budget, "lattice-point budget");
    volume->add_flag("--porcelain", vol_porcelain, "machine-readable key=value output");

    // regulator
    auto* regulator = app.add_subcommand("regulator", "S-regulator from a log-embedding table");
    std::string reg_table, reg_basis;
    double reg_tol = 1e-9;
    bool reg_porcelain = false;
    regulator->add_option("--table", reg_table, "embedding table file")->required();
    regulator->add_option("--basis", reg_basis, "comma-separated unit labels")->required();
    regulator->add_option("--tolerance", reg_tol, "product-formula residual tolerance");
    regulator->add_flag("--porcelain", reg_porcelain, "machine-readable key=value output");

    // conjecture
    auto* conjecture =
        app.add_subcommand("conjecture", "wedge/height statistics for chosen units");
    std::string c_table, c_units;
    double c_tol = 1e-9;
    bool c_porcelain = false;
    conjecture->add_option("--table", c_table, "embedding table file")->required();
    conjecture->add_option("--units", c_units, "comma-separated unit labels")->required();
    conjecture->add_option("--tolerance", c_tol, "product-formula residual tolerance");
    conjecture->add_flag("--porcelain", c_porcelain, "machine-readable key=value output");

    std::vector<const char*> argv;
    argv.push_back("wedgecert");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    const auto start = std::chrono::steady_clock::now();
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        Report rep;
        std::string command;
        std::vector<std::string> files;
        if (wedge->parsed()) {
            command = "wedge-norm";
            inv.porcelain = wn_porcelain;
            files = {wn_matrix};
        } else if (mu->parsed()) {
            command = "mu";
            inv.porcelain = mu_porcelain;
        } else if (verify->parsed()) {
            command = "verify";
            inv.porcelain = v_porcelain;
            files = {v_matrix};
        } else if (partition->parsed()) {
            command = "partition";
            inv.porcelain = p_porcelain;
            files = {p_system};
        } else if (reduce->parsed()) {
            command = "reduce";
            inv.porcelain = r_porcelain;
            files = {r_matrix};
        } else if (volume->parsed()) {
            command = "volume";
            inv.porcelain = vol_porcelain;
            files = {vol_matrix};
        } else if (regulator->parsed()) {
            command = "regulator";
            inv.porcelain = reg_porcelain;
            files = {reg_table};
        } else if (conjecture->parsed()) {
            command = "conjecture";
            inv.porcelain = c_porcelain;
            files = {c_table};
        }

        rep.add("command", command);
        rep.add("digest", input_digest(args, files));

        if (wedge->parsed())
            cmd_wedge_norm(wn_matrix, inv, rep);
        else if (mu->parsed())
            cmd_mu(mu_grade, mu_dim, mu_budget, mu_workers, mu_no_cache, mu_cache_dir, inv,
                   rep);
        else if (verify->parsed())
            cmd_verify(v_matrix, v_theorem, v_tol, inv, rep);
        else if (partition->parsed())
            cmd_partition(p_system, inv, rep);
        else if (reduce->parsed())
            cmd_reduce(r_matrix, r_report, r_budget, r_workers, inv, rep);
        else if (volume->parsed())
            cmd_volume(vol_matrix, vol_samples, vol_seed, vol_budget, inv, rep);
        else if (regulator->parsed())
            cmd_regulator(reg_table, reg_basis, reg_tol, inv, rep);
        else if (conjecture->parsed())
            cmd_conjecture(c_table, c_units, c_tol, inv, rep);

        rep.add("status", inv.violated ? "violated" : "ok");
        if (!inv.porcelain) {
            out << command << '\n';
            const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
            rep.add("time", std::to_string(elapsed / 1000.0) + " ms");
        }
        rep.render(out, inv.porcelain);
        if (inv.violated) {
            err << "internal fault: a certified inequality failed to hold\n";
            return 2;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const InternalFault& e) {
        err << "internal fault: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace wedgecert
