#include "orbeq/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace orbeq {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    for (const auto& part : split(s, ','))
        out.push_back(rat_from_string(trim(part)));
    return out;
}

std::string dirname_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string(".") : path.substr(0, pos);
}

} // namespace

MatrixFile parse_matrix_text(const std::string& text, const Ring& ring) {
    std::istringstream in(text);
    std::string line;
    MatrixFile out;
    std::size_t rp = 0, rm = 0;

    // header
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') break;
    }
    {
        std::istringstream hs(line);
        std::string kw, kw2, kw3;
        hs >> kw >> kw2;
        if (kw != "mf" || kw2 != "rank") throw std::runtime_error("matrix file: bad header");
        hs >> rp >> rm >> kw3;
        if (!hs || kw3 != "shifts") throw std::runtime_error("matrix file: bad header");
        std::string rest;
        std::getline(hs, rest);
        auto parts = split(trim(rest), '|');
        if (parts.size() != 2) throw std::runtime_error("matrix file: shifts need even|odd lists");
        out.shifts_even = parse_rat_list(parts[0]);
        out.shifts_odd = parse_rat_list(parts[1]);
        if (out.shifts_even.size() != rp || out.shifts_odd.size() != rm)
            throw std::runtime_error("matrix file: shift counts differ from ranks");
    }

    auto parse_entry = [&](const std::string& src) {
        SeedEntry e;
        std::string t = trim(src);
        if (t == "_") {
            e.kind = SeedEntry::Kind::forced_zero;
        } else if (t == "?") {
            e.kind = SeedEntry::Kind::free_span;
            out.has_free_entries = true;
        } else {
            e.kind = SeedEntry::Kind::fixed;
            e.fixed = parse_polynomial(t, ring);
        }
        return e;
    };
    auto read_block = [&](const std::string& name, std::size_t rows, std::size_t cols) {
        while (std::getline(in, line)) {
            line = trim(line);
            if (!line.empty() && line[0] != '#') break;
        }
        if (trim(line) != name) throw std::runtime_error("matrix file: expected '" + name + "' block");
        std::vector<std::vector<SeedEntry>> block;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!std::getline(in, line)) throw std::runtime_error("matrix file: truncated block");
            auto parts = split(line, ';');
            if (parts.size() != cols)
                throw std::runtime_error("matrix file: wrong entry count in a row");
            std::vector<SeedEntry> row;
            for (const auto& p : parts) row.push_back(parse_entry(p));
            block.push_back(std::move(row));
        }
        return block;
    };
    out.entries.sharp = read_block("sharp", rp, rm);
    out.entries.flat = read_block("flat", rm, rp);
    return out;
}

MatrixFile read_matrix_file(const std::string& path, const Ring& ring) {
    return parse_matrix_text(read_file(path), ring);
}

std::string write_matrix_text(const MatrixFactorization& mf) {
    std::ostringstream os;
    os << "mf rank " << mf.rank_even() << " " << mf.rank_odd() << " shifts ";
    for (std::size_t i = 0; i < mf.module.even.shifts.size(); ++i)
        os << (i ? "," : "") << rat_to_string(mf.module.even.shifts[i]);
    os << "|";
    for (std::size_t i = 0; i < mf.module.odd.shifts.size(); ++i)
        os << (i ? "," : "") << rat_to_string(mf.module.odd.shifts[i]);
    os << "\nsharp\n";
    auto write_block = [&](const PolyMatrix& block) {
        for (const auto& row : block) {
            for (std::size_t j = 0; j < row.size(); ++j)
                os << (j ? " ; " : "") << (row[j].is_zero() ? "_" : row[j].to_string());
            os << "\n";
        }
    };
    write_block(mf.sharp);
    os << "flat\n";
    write_block(mf.flat);
    return os.str();
}

MatrixFactorization to_factorization(const MatrixFile& file, const Ring& ring,
                                     const Polynomial& target) {
    if (file.has_free_entries)
        throw std::runtime_error("matrix file has generic '?' entries; use it as a seed");
    MatrixFactorization mf;
    mf.ring = ring;
    mf.module = SuperModule{GradedFreeModule{file.shifts_even}, GradedFreeModule{file.shifts_odd}};
    mf.target = target;
    auto conv = [&](const std::vector<std::vector<SeedEntry>>& block) {
        PolyMatrix out;
        for (const auto& row : block) {
            std::vector<Polynomial> r;
            for (const auto& e : row)
                r.push_back(e.kind == SeedEntry::Kind::fixed ? e.fixed : Polynomial(ring));
            out.push_back(std::move(r));
        }
        return out;
    };
    mf.sharp = conv(file.entries.sharp);
    mf.flat = conv(file.entries.flat);
    return mf;
}

std::pair<std::vector<Rat>, std::vector<Rat>> shifts_from_grading_matrix(
    const std::vector<std::vector<Rat>>& g) {
    if (g.empty() || g[0].empty()) throw std::runtime_error("grading matrix: empty");
    std::size_t rp = g.size(), rm = g[0].size();
    for (const auto& row : g)
        if (row.size() != rm) throw std::runtime_error("grading matrix: ragged rows");
    // n+_1 = 0, so n-_j = g[0][j] - 1 and n+_i = n-_1 - g[i][0] + 1
    std::vector<Rat> even(rp), odd(rm);
    even[0] = Rat(0);
    for (std::size_t j = 0; j < rm; ++j) odd[j] = g[0][j] - 1;
    for (std::size_t i = 0; i < rp; ++i) even[i] = odd[0] - g[i][0] + 1;
    for (std::size_t i = 0; i < rp; ++i)
        for (std::size_t j = 0; j < rm; ++j)
            if (g[i][j] != odd[j] - even[i] + 1)
                throw std::runtime_error("grading matrix: not of the form n_j - n_i + 1");
    return {even, odd};
}

ProblemFile read_problem_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::string dir = dirname_of(path);

    struct RingBlock {
        std::vector<VariableSpec> vars;
        std::string potential;
    };
    std::optional<RingBlock> left, right;
    RingBlock* cur = nullptr;
    std::optional<std::vector<Rat>> shifts_even, shifts_odd;
    std::optional<std::string> grading_file, seed_file;
    Limits limits;

    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kw;
        ls >> kw;
        if (kw == "ring") {
            std::string which;
            ls >> which;
            if (which == "left") { left.emplace(); cur = &*left; }
            else if (which == "right") { right.emplace(); cur = &*right; }
            else throw std::runtime_error("problem file: ring must be 'left' or 'right'");
        } else if (kw == "var") {
            if (!cur) throw std::runtime_error("problem file: 'var' outside a ring block");
            std::string name, wkw, weight;
            ls >> name >> wkw >> weight;
            if (wkw != "weight") throw std::runtime_error("problem file: expected 'weight'");
            cur->vars.push_back({name, rat_from_string(weight), VarKind::geometric});
        } else if (kw == "potential") {
            if (!cur) throw std::runtime_error("problem file: 'potential' outside a ring block");
            std::string rest;
            std::getline(ls, rest);
            cur->potential = trim(rest);
        } else if (kw == "ansatz") {
            cur = nullptr;
        } else if (kw == "shifts_even" || kw == "shifts_odd") {
            std::string rest;
            std::getline(ls, rest);
            auto vals = parse_rat_list(trim(rest));
            (kw == "shifts_even" ? shifts_even : shifts_odd) = vals;
        } else if (kw == "grading_matrix") {
            std::string f;
            ls >> f;
            grading_file = dir + "/" + f;
        } else if (kw == "seed") {
            std::string f;
            ls >> f;
            seed_file = dir + "/" + f;
        } else if (kw == "limits") {
            std::string k;
            while (ls >> k) {
                if (k == "steps") ls >> limits.max_pair_reductions;
                else if (k == "polys") ls >> limits.max_basis_size;
                else if (k == "seconds") ls >> limits.max_seconds;
                else throw std::runtime_error("problem file: unknown limit '" + k + "'");
            }
        } else {
            throw std::runtime_error("problem file: unknown directive '" + kw + "'");
        }
    }
    if (!left || !right) throw std::runtime_error("problem file: need both ring blocks");
    if (left->potential.empty() || right->potential.empty())
        throw std::runtime_error("problem file: each ring block needs a potential");

    ProblemFile out;
    {
        Ring lr = GradedRing::make(left->vars);
        Ring rr = GradedRing::make(right->vars);
        out.left = validate_potential(parse_polynomial(left->potential, lr));
        out.right = validate_potential(parse_polynomial(right->potential, rr));
    }
    out.pair = make_tensor_pair(out.left, out.right);
    out.limits = limits;

    if (grading_file) {
        std::istringstream gs(read_file(*grading_file));
        std::vector<std::vector<Rat>> g;
        while (std::getline(gs, line)) {
            line = trim(line);
            if (line.empty() || line[0] == '#') continue;
            std::vector<Rat> row;
            std::istringstream rs(line);
            std::string tok;
            while (rs >> tok) row.push_back(rat_from_string(tok));
            g.push_back(std::move(row));
        }
        auto [e, o] = shifts_from_grading_matrix(g);
        out.shifts_even = e;
        out.shifts_odd = o;
    }
    if (shifts_even) out.shifts_even = shifts_even;
    if (shifts_odd) out.shifts_odd = shifts_odd;

    if (seed_file) {
        MatrixFile mfile = read_matrix_file(*seed_file, out.pair.joint);
        out.seed = mfile.entries;
        if (!out.shifts_even) out.shifts_even = mfile.shifts_even;
        if (!out.shifts_odd) out.shifts_odd = mfile.shifts_odd;
    }
    return out;
}

} // namespace orbeq
