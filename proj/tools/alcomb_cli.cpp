// Command-line frontend: deterministic enumeration, verification, and export
// for the word/core/alcove models, the equivariant bijection, the exact CSP
// checker, and the Shi-arrangement labelings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "alcomb/affine.hpp"
#include "alcomb/bijact.hpp"
#include "alcomb/cores.hpp"
#include "alcomb/shi.hpp"
#include "alcomb/sieve.hpp"
#include "alcomb/words.hpp"
#include "alcomb/xposet.hpp"

namespace {

using namespace alcomb;

struct Options {
    int m = 2;
    int k = 1;
    int rank = 0;
    std::string format = "table";
    std::string model = "x";
    std::string from = "xword";
    std::string value;
    std::string out;
    bool force = false;
};

void write_output(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + opt.out);
    file << text;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

void guard_budget(bool ok, bool force, const std::string& what) {
    if (!ok && !force)
        throw CLI::ValidationError("budget", what + " exceeds the desk-scale budget; pass --force to override");
}

// Display width in code points; the middle dot is multi-byte in UTF-8.
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char ch : s)
        if ((ch & 0xc0) != 0x80) ++w;
    return w;
}

std::string padded(const std::string& s, std::size_t width) {
    std::string out = s;
    for (std::size_t w = display_width(s); w < width; ++w) out.push_back(' ');
    return out;
}

std::string spaced_extended(const Word& x) {
    const Word ext = extended_word(x).letters;
    const int seg = static_cast<int>(x.size()) + 1;
    std::ostringstream out;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        if (i > 0 && i % seg == 0) out << ' ';
        out << ext[i];
    }
    return out.str();
}

std::string orbits_table(int m, int k) {
    std::ostringstream out;
    out << "phi-orbits of X(m=" << m << ", k=" << k << ") and their images in W(m=" << m
        << ", k=" << k << ")\n";
    const auto orbits = phi_orbits(m, k);
    for (std::size_t idx = 0; idx < orbits.size(); ++idx) {
        const auto& orbit = orbits[idx];
        out << "orbit " << idx + 1 << " (size " << orbit.size() << "): x =";
        for (const Word& x : orbit) out << ' ' << x.to_string();
        out << "\n  extended:";
        for (std::size_t i = 0; i < orbit.size(); ++i)
            out << (i ? " | " : " ") << spaced_extended(orbit[i]);
        out << "\n  w-images:";
        for (const Word& x : orbit) out << ' ' << w_map(x).to_string();
        out << "\n";
    }
    return out.str();
}

int cmd_orbits(const Options& opt) {
    guard_budget(ipow(opt.m, opt.k) <= 100000, opt.force, "m^k");
    write_output(opt, orbits_table(opt.m, opt.k));
    return 0;
}

int cmd_csp(const Options& opt) {
    guard_budget(ipow(opt.m, opt.k) <= 100000, opt.force, "m^k");
    const auto elements = enumerate_w_words(opt.m, opt.k);
    const CspReport report =
        csp_check(elements, [](const Word& w) { return rotate_left(w); }, opt.k + 1,
                  w_poly(opt.m, opt.k));
    std::ostringstream out;
    if (opt.format == "json") {
        out << report.to_json() << "\n";
    } else {
        out << "CSP check: |W(" << opt.m << "," << opt.k << ")| = " << elements.size()
            << ", order n = " << report.n << "\n"
            << report.to_table() << "result: " << (report.all_match() ? "PASS" : "FAIL") << "\n";
    }
    write_output(opt, out.str());
    return report.all_match() ? 0 : 2;
}

int cmd_map(const Options& opt) {
    const int m = opt.m, k = opt.k;
    guard_budget(ipow(m, k) <= 100000, opt.force, "m^k");
    Word x = Word(m);
    if (opt.from == "xword") {
        x = Word::parse(m, opt.value);
    } else if (opt.from == "core") {
        x = core_to_word(Partition::parse(opt.value), m, k);
    } else if (opt.from == "wword") {
        x = w_inverse(Word::parse(m, opt.value));
    } else if (opt.from == "window") {
        std::vector<long long> win;
        std::string buf;
        for (char ch : opt.value)
            if (ch == '[' || ch == ']' || ch == ',') {
                if (!buf.empty()) win.push_back(std::stoll(buf));
                buf.clear();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                buf.push_back(ch);
            }
        if (!buf.empty()) win.push_back(std::stoll(buf));
        AffinePermutation perm(k + 1, win);
        bool found = false;
        for (const DilationState& st : enumerate_dilation(k + 1, m))
            if (st.perm == perm) {
                x = st.word;
                found = true;
            }
        if (!found) throw CLI::ValidationError("value", "window is not an alcove of the dilation");
    } else {
        throw CLI::ValidationError("--from", "expected xword, core, wword, or window");
    }
    detail::require(static_cast<int>(x.size()) == k, "map: word length must equal k");

    const Partition core = word_to_core(x, m, k);
    const std::string bw = boundary_word(core, m, k);
    const auto rows = abacus(bw, k);
    std::string window = "(none)";
    for (const DilationState& st : enumerate_dilation(k + 1, m))
        if (st.word == x) window = st.perm.to_string();

    std::ostringstream out;
    out << "core:     " << core.to_string() << "\n";
    out << "boundary: ";
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "|" : "") << rows[i];
    out << "\nabacus:   ";
    for (std::size_t i = 0; i < rows.size(); ++i) out << (i ? "\n          " : "") << rows[i];
    out << "\nx-word:   " << x.to_string() << "\n";
    out << "w-word:   " << w_map(x).to_string() << "\n";
    out << "window:   " << window << "\n";
    write_output(opt, out.str());
    return 0;
}

int cmd_invert(const Options& opt) {
    const int m = opt.m;
    const Word w = Word::parse(m, opt.value);
    guard_budget(w.size() <= 64, opt.force, "word length");
    std::ostringstream out;
    out << "word: " << w.to_string() << "  (m=" << m << ", sigma=" << w.sum_mod() << ")\n";
    const auto states = successful_partition_trace(w);
    const std::size_t col = w.size() + static_cast<std::size_t>(m) + 2;
    out << "successful partition construction:\n";
    for (const PartitionedWord& state : states) {
        const QResult res = q_map(state);
        out << "  " << padded(state.to_string(), col) << "leftover " << res.leftover.to_string()
            << "\n";
    }
    out << "read-off trace:\n";
    out << "   i  t  " << padded("partition", col) << "x\n";
    for (const QTraceRow& row : q_map_trace(states.back())) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  %2d  %d  ", row.step, row.label);
        out << buf << padded(row.state, col) << row.trace << "\n";
    }
    if (w.sum_mod() == detail::mod(m - 1, m) && !w.empty()) {
        out << "preimage x-word: " << w_inverse(w).to_string() << "\n";
    }
    write_output(opt, out.str());
    return 0;
}

int cmd_tree(const Options& opt) {
    guard_budget(ipow(opt.m, opt.rank) <= 100000, opt.force, "m^rank");
    std::ostringstream out;
    for (int r = 0; r <= opt.rank; ++r) {
        out << "rank " << r << ":";
        for (const PartitionedWord& node : tree_rank(opt.m, r)) out << "  " << node.to_string();
        out << "\n";
    }
    write_output(opt, out.str());
    return 0;
}

int cmd_hasse(const Options& opt) {
    const int m = opt.m, k = opt.k;
    guard_budget(ipow(m, k) <= 100000, opt.force, "m^k");
    std::vector<std::pair<Word, Word>> edges;
    std::string name;
    if (opt.model == "x") {
        edges = x_hasse(m, k);
        name = "x_hasse";
    } else if (opt.model == "y") {
        for (const auto& [lo, hi] : y_hasse(m, k))
            edges.emplace_back(core_to_word(lo, m, k), core_to_word(hi, m, k));
        name = "y_hasse";
    } else if (opt.model == "dilation") {
        const auto states = enumerate_dilation(k + 1, m);
        std::ostringstream out;
        if (opt.format == "json") {
            out << "{\"edges\":[";
            const auto cover = dilation_cover_edges(states);
            for (std::size_t i = 0; i < cover.size(); ++i) {
                if (i) out << ",";
                out << "[\"" << states[cover[i].first].perm.to_string() << "\",\""
                    << states[cover[i].second].perm.to_string() << "\"]";
            }
            out << "]}\n";
        } else {
            out << "digraph dilation {\n";
            for (const DilationState& st : states)
                out << "  \"" << st.perm.to_string() << "\" [label=\"" << st.core.to_string()
                    << " / " << st.word.to_string() << "\"];\n";
            for (const auto& [lo, hi] : dilation_cover_edges(states))
                out << "  \"" << states[lo].perm.to_string() << "\" -> \""
                    << states[hi].perm.to_string() << "\";\n";
            out << "}\n";
        }
        write_output(opt, out.str());
        return 0;
    } else {
        throw CLI::ValidationError("--model", "expected x, y, or dilation");
    }
    if (opt.format == "json")
        write_output(opt, edges_to_json(edges) + "\n");
    else
        write_output(opt, edges_to_dot(edges, name));
    return 0;
}

int cmd_shi(const Options& opt) {
    const int k = opt.k, m = opt.m;
    guard_budget(k >= 2 && ipow(static_cast<long long>(k) * m + 1, k - 1) <= 100000 && k <= 5,
                 opt.force, "(km+1)^(k-1)");
    if (opt.format == "csv") {
        write_output(opt, shi_report_csv(k, m));
        return 0;
    }
    const auto regions = enumerate_regions(k, m);
    const auto dilation = enumerate_dilation(k, k * m + 1);
    const RegionLabeling labeling = new_labeling(k, m, regions, dilation);
    std::ostringstream out;
    out << regions.size() << " regions of the " << m << "-Shi arrangement, k = " << k
        << " (translation t = [";
    for (std::size_t i = 0; i < labeling.translation.size(); ++i)
        out << (i ? "," : "") << labeling.translation[i];
    out << "])\n";
    out << " id  minimal alcove   pak-stanley  coset\n";
    for (std::size_t i = 0; i < regions.size(); ++i) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%3zu  ", i);
        out << buf;
        std::string win = regions[i].minimal_alcove.to_string();
        out << win;
        for (std::size_t pad = win.size(); pad < 17; ++pad) out << ' ';
        std::string ps = pak_stanley(regions[i], k, m).to_string();
        out << ps;
        for (std::size_t pad = ps.size(); pad < 13; ++pad) out << ' ';
        out << labeling.labels[i].to_string() << "\n";
    }
    write_output(opt, out.str());
    return 0;
}

int cmd_parking_csp(const Options& opt) {
    const int k = opt.k, m = opt.m;
    guard_budget(ipow(static_cast<long long>(k) * m + 1, k - 1) <= 100000, opt.force,
                 "(km+1)^(k-1)");
    const CspReport report = parking_csp(k, m);
    std::ostringstream out;
    if (opt.format == "json") {
        out << report.to_json() << "\n";
    } else {
        out << "CSP check: " << m << "-parking functions of length " << k
            << ", order n = " << report.n << "\n"
            << report.to_table() << "result: " << (report.all_match() ? "PASS" : "FAIL") << "\n";
    }
    write_output(opt, out.str());
    return report.all_match() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alcove/core/word combinatorics toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_k = true) {
        sub->add_option("--m", opt.m, "modulus m")->check(CLI::PositiveNumber);
        if (with_k) sub->add_option("--k", opt.k, "length parameter k")->check(CLI::NonNegativeNumber);
        sub->add_option("--format", opt.format, "output format");
        sub->add_option("--out", opt.out, "write output to FILE");
        sub->add_flag("--force", opt.force, "override desk-scale budget guards");
    };

    auto* orbits = app.add_subcommand("orbits", "phi-orbit table with W-images");
    add_common(orbits);
    auto* csp = app.add_subcommand("csp", "exact cyclic sieving check for W(m,k)");
    add_common(csp);
    auto* map = app.add_subcommand("map", "convert between x-word, core, w-word, and window");
    add_common(map);
    map->add_option("--from", opt.from, "input kind: xword|core|wword|window");
    map->add_option("value", opt.value, "input value")->required();
    auto* invert = app.add_subcommand("invert", "successful partition and read-off trace");
    add_common(invert, false);
    invert->add_option("value", opt.value, "word over Z/mZ")->required();
    auto* tree = app.add_subcommand("tree", "ranks of the successful-partition tree");
    add_common(tree, false);
    tree->add_option("--rank", opt.rank, "deepest rank to print")->check(CLI::NonNegativeNumber);
    auto* hasse = app.add_subcommand("hasse", "Hasse diagram exports (dot or json)");
    add_common(hasse);
    hasse->add_option("--model", opt.model, "poset: x|y|dilation");
    auto* shi = app.add_subcommand("shi", "Shi regions with both parking-function labelings");
    add_common(shi);
    auto* pcsp = app.add_subcommand("parking-csp", "CSP check for m-parking functions");
    add_common(pcsp);

    try {
        app.parse(argc, argv);
        if (orbits->parsed()) return cmd_orbits(opt);
        if (csp->parsed()) return cmd_csp(opt);
        if (map->parsed()) return cmd_map(opt);
        if (invert->parsed()) return cmd_invert(opt);
        if (tree->parsed()) return cmd_tree(opt);
        if (hasse->parsed()) return cmd_hasse(opt);
        if (shi->parsed()) return cmd_shi(opt);
        if (pcsp->parsed()) return cmd_parking_csp(opt);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
