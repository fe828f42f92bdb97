#include <CLI11.hpp>

#include <array>
#include <iostream>

#include "orbeq/io.hpp"

using namespace orbeq;

namespace {

// exit codes: 0 found/ok, 1 exhausted/failed check, 2 input error, 3 all
// candidates resource-limited

std::string weights_line(const Potential& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.ring->size(); ++i)
        os << (i ? " " : "") << p.ring->var(i).name << "=" << rat_to_string(p.ring->var(i).weight);
    return os.str();
}

int cmd_validate(const std::string& path) {
    ProblemFile pf = read_problem_file(path);
    for (const auto& [label, pot] : {std::pair<const char*, const Potential&>{"left", pf.left},
                                     {"right", pf.right}}) {
        std::cout << label << ": degree " << rat_to_string(pot.degree) << ", weights "
                  << weights_line(pot) << ", jacobian dimension " << pot.jacobian_dimension
                  << ", central charge " << rat_to_string(central_charge(pot)) << "\n";
    }
    Rat cl = central_charge(pf.left), cr = central_charge(pf.right);
    if (cl == cr)
        std::cout << "central charges match\n";
    else
        std::cout << "warning: central charges differ (" << rat_to_string(cl) << " vs "
                  << rat_to_string(cr) << ")\n";
    return 0;
}

AnsatzSpec spec_from_problem(const ProblemFile& pf) {
    if (!pf.shifts_even || !pf.shifts_odd)
        throw std::runtime_error("problem file needs an ansatz block (shift lists, a grading "
                                 "matrix, or a seed with shifts)");
    AnsatzSpec spec;
    spec.pair = pf.pair;
    spec.shifts_even = *pf.shifts_even;
    spec.shifts_odd = *pf.shifts_odd;
    spec.seed = pf.seed;
    return spec;
}

int cmd_stats(const std::string& path, const std::string& name_opt, bool full) {
    ProblemFile pf = read_problem_file(path);
    AnsatzSpec spec = spec_from_problem(pf);
    GenericMF gmf = build_generic(spec);
    EquationSystem sys = append_nonvanishing(extract(gmf, /*half=*/!full), gmf);
    std::string name = name_opt;
    if (name.empty()) {
        name = path;
        auto pos = name.find_last_of('/');
        if (pos != std::string::npos) name = name.substr(pos + 1);
        pos = name.rfind(".problem");
        if (pos != std::string::npos) name = name.substr(0, pos);
    }
    std::cout << render_stats_row(name, stats(sys)) << "\n";
    return 0;
}

MatrixFactorization load_factorization(const ProblemFile& pf, const std::string& mfpath) {
    MatrixFile mfile = read_matrix_file(mfpath, pf.pair.joint);
    return to_factorization(mfile, pf.pair.joint, pf.pair.f_joint - pf.pair.g_joint);
}

int cmd_qdim(const std::string& path, const std::string& mfpath, const std::string& side) {
    ProblemFile pf = read_problem_file(path);
    MatrixFactorization mf = load_factorization(pf, mfpath);
    auto print_side = [&](Side s, const char* label) {
        Polynomial q = quantum_dimension(mf, pf.pair, s);
        std::cout << label << " qdim: " << q.to_string();
        if (q.is_zero()) std::cout << "   ** ZERO **";
        std::cout << "\n";
        return !q.is_zero();
    };
    bool ok = true;
    if (side == "left" || side == "both") ok &= print_side(Side::left, "left");
    if (side == "right" || side == "both") ok &= print_side(Side::right, "right");
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& path, const std::string& mfpath) {
    ProblemFile pf = read_problem_file(path);
    MatrixFactorization mf = load_factorization(pf, mfpath);
    bool pass = true;

    FactorizationCheck fc = verify_factorization(mf);
    std::cout << "factorization identity: " << (fc.verified ? "PASS" : "FAIL") << "\n";
    if (!fc.verified) {
        pass = false;
        auto dump = [&](const char* label, const PolyMatrix& m) {
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m[i].size(); ++j)
                    if (!m[i][j].is_zero())
                        std::cout << "  residual[" << label << "][" << i << "][" << j
                                  << "] = " << m[i][j].to_string() << "\n";
        };
        dump("sharp*flat", fc.residual_sharp_flat);
        dump("flat*sharp", fc.residual_flat_sharp);
    }

    bool grading_ok = grading_matrix_check(mf);
    std::cout << "grading check: " << (grading_ok ? "PASS" : "FAIL") << "\n";
    pass &= grading_ok;

    for (auto [s, label] : {std::pair<Side, const char*>{Side::left, "left"},
                            {Side::right, "right"}}) {
        Polynomial q = quantum_dimension(mf, pf.pair, s);
        std::cout << label << " qdim: " << q.to_string() << (q.is_zero() ? "   ** ZERO **" : "")
                  << "\n";
        pass &= !q.is_zero();
    }
    std::cout << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 1;
}

std::string rat_list(const std::vector<Rat>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_to_string(v[i]);
    return os.str();
}

int cmd_search(const std::string& path, SearchOptions opts, const std::string& seed_path,
               const std::array<bool, 3>& limit_given, const Limits& cli_limits) {
    ProblemFile pf = read_problem_file(path);
    opts.limits = pf.limits;
    if (limit_given[0]) opts.limits.max_pair_reductions = cli_limits.max_pair_reductions;
    if (limit_given[1]) opts.limits.max_basis_size = cli_limits.max_basis_size;
    if (limit_given[2]) opts.limits.max_seconds = cli_limits.max_seconds;

    if (!seed_path.empty()) {
        MatrixFile mfile = read_matrix_file(seed_path, pf.pair.joint);
        opts.seed = mfile.entries;
        opts.shifts = {mfile.shifts_even, mfile.shifts_odd};
    } else if (pf.seed) {
        opts.seed = pf.seed;
        if (pf.shifts_even && pf.shifts_odd) opts.shifts = {*pf.shifts_even, *pf.shifts_odd};
    } else if (pf.shifts_even && pf.shifts_odd) {
        opts.shifts = {*pf.shifts_even, *pf.shifts_odd};
    }

    Rat cl = central_charge(pf.left), cr = central_charge(pf.right);
    if (cl != cr)
        std::cout << "warning: central charges differ (" << rat_to_string(cl) << " vs "
                  << rat_to_string(cr) << "); equivalence is impossible\n";

    std::size_t n = 0, limited = 0;
    bool found = search(pf.pair, opts, [&](const SearchReport& rep) {
        ++n;
        if (opts.export_only) {
            std::cout << rep.exported;
            return;
        }
        std::cout << "candidate " << n << " shifts_even=" << rat_list(rep.shifts_even)
                  << " shifts_odd=" << rat_list(rep.shifts_odd)
                  << " vars=" << rep.system_stats.parameters
                  << " eqs=" << rep.system_stats.equations << " residual=" << rep.residual_equations
                  << "eq/" << rep.residual_variables << "var -> ";
        switch (rep.verdict.kind) {
        case VerdictKind::consistent: std::cout << "consistent"; break;
        case VerdictKind::inconsistent: std::cout << "inconsistent"; break;
        case VerdictKind::resource_limit:
            std::cout << "resource limit";
            ++limited;
            break;
        }
        std::cout << "\n";
        if (rep.witness) {
            std::cout << "witness";
            for (const auto& [name, value] : rep.witness->values)
                std::cout << " " << name << "=" << rat_to_string(value);
            std::cout << (rep.witness->reverified ? " reverified" : "") << "\n";
        }
    });
    if (opts.export_only) return 0;
    if (found) return 0;
    if (n > 0 && limited == n) return 3;
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbifold equivalence search toolkit"};
    app.require_subcommand(1);

    std::string problem, matrix, name, side = "both", seed_path, export_fmt;
    bool full = false;
    SearchOptions opts;
    Limits cli_limits;
    unsigned max_rank = 1;
    std::string shift_bound = "2";
    unsigned jobs = 1, witness_budget = 256;
    bool no_half = false;

    auto* validate = app.add_subcommand("validate", "validate both potentials");
    validate->add_option("problem", problem)->required();

    auto* stats_cmd = app.add_subcommand("stats", "ansatz system size (vars | eqs)");
    stats_cmd->add_option("problem", problem)->required();
    stats_cmd->add_option("--name", name, "row label");
    stats_cmd->add_flag("--full", full, "count both blocks (no halving)");

    auto* qdim_cmd = app.add_subcommand("qdim", "quantum dimensions of a matrix factorization");
    qdim_cmd->add_option("problem", problem)->required();
    qdim_cmd->add_option("matrix", matrix)->required();
    qdim_cmd->add_option("--side", side)->check(CLI::IsMember({"left", "right", "both"}));

    auto* verify = app.add_subcommand("verify", "check d^2 = (f-g)Id, gradings and qdims");
    verify->add_option("problem", problem)->required();
    verify->add_option("matrix", matrix)->required();

    auto* search_cmd = app.add_subcommand("search", "run the equivalence search pipeline");
    search_cmd->add_option("problem", problem)->required();
    search_cmd->add_option("--max-rank", max_rank);
    search_cmd->add_option("--shift-bound", shift_bound);
    search_cmd->add_option("--seed", seed_path, "seed matrix file");
    search_cmd->add_flag("--no-half", no_half, "extract both blocks");
    search_cmd->add_option("--export", export_fmt, "dump systems instead of checking")
        ->check(CLI::IsMember({"native", "mq_style"}));
    search_cmd->add_option("--steps", cli_limits.max_pair_reductions);
    search_cmd->add_option("--polys", cli_limits.max_basis_size);
    search_cmd->add_option("--seconds", cli_limits.max_seconds);
    search_cmd->add_option("--jobs", jobs);
    search_cmd->add_option("--witness-budget", witness_budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(problem);
        if (stats_cmd->parsed()) return cmd_stats(problem, name, full);
        if (qdim_cmd->parsed()) return cmd_qdim(problem, matrix, side);
        if (verify->parsed()) return cmd_verify(problem, matrix);
        if (search_cmd->parsed()) {
            opts.max_rank = max_rank;
            opts.shift_bound = rat_from_string(shift_bound);
            opts.half = !no_half;
            opts.jobs = jobs;
            opts.witness_budget = witness_budget;
            if (!export_fmt.empty()) {
                opts.export_only = true;
                opts.export_format =
                    export_fmt == "native" ? ExportFormat::native : ExportFormat::mq_style;
            }
            std::array<bool, 3> limit_given = {search_cmd->count("--steps") > 0,
                                               search_cmd->count("--polys") > 0,
                                               search_cmd->count("--seconds") > 0};
            return cmd_search(problem, opts, seed_path, limit_given, cli_limits);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
