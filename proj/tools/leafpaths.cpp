#include <atomic>
#include <charconv>
#include <csignal>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leafpaths/error.hpp"
#include "leafpaths/generators.hpp"
#include "leafpaths/greedy.hpp"
#include "leafpaths/kraft.hpp"
#include "leafpaths/oracle.hpp"
#include "leafpaths/pathlens.hpp"
#include "leafpaths/tree.hpp"

namespace {

using namespace leafpaths;

constexpr const char* kVersion = "0.1.0";

volatile std::sig_atomic_t g_interrupted = 0;

void handle_interrupt(int) { g_interrupted = 1; }

struct GlobalOpts {
    int workers = 1;
    int labeled_cap = 9;
    int deduped_cap = 12;
    std::uint64_t seed = 0;
    std::string output = "-";
    std::string command_line;
};

int parse_int(const std::string& text) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw Error(ErrorKind::MalformedInput, "not an integer: '" + text + "'");
    return value;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ')
            item.erase(item.begin());
        while (!item.empty() && item.back() == ' ')
            item.pop_back();
        if (item.empty())
            throw Error(ErrorKind::MalformedInput, "empty entry in list '" + text + "'");
        out.push_back(parse_int(item));
    }
    if (out.empty())
        throw Error(ErrorKind::MalformedInput, "empty list");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(text);
        return {v, v};
    }
    int lo = parse_int(text.substr(0, dots));
    int hi = parse_int(text.substr(dots + 2));
    if (lo > hi)
        throw Error(ErrorKind::MalformedInput, "empty range '" + text + "'");
    return {lo, hi};
}

oracle::EnumerationCaps resolved_caps(const GlobalOpts& g) {
    oracle::EnumerationCaps caps{g.labeled_cap, g.deduped_cap};
    if (const char* env = std::getenv("LEAFPATHS_CAP_OVERRIDE")) {
        std::string text(env);
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw Error(ErrorKind::MalformedInput,
                        "LEAFPATHS_CAP_OVERRIDE must look like '<labeled>:<deduped>'");
        caps.labeled = parse_int(text.substr(0, colon));
        caps.deduped = parse_int(text.substr(colon + 1));
    }
    return caps;
}

class Output {
  public:
    explicit Output(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_)
                throw Error(ErrorKind::MalformedInput, "cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

void write_csv_preamble(std::ostream& os, const GlobalOpts& g,
                        const oracle::EnumerationCaps& caps) {
    os << "# leafpaths " << kVersion << "\n";
    os << "# command: " << g.command_line << "\n";
    os << "# seed: " << g.seed << "\n";
    os << "# caps: labeled=" << caps.labeled << " deduped=" << caps.deduped << "\n";
    os << "# workers: " << g.workers << "\n";
}

std::string join_ints(const std::vector<int>& values, char sep = ' ') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

std::string describe_certificate(const LowerBoundCertificate& cert) {
    std::string out;
    if (cert.kind == LowerBoundCertificate::Kind::DepthCount) {
        out = "depth_count rooting=" + std::to_string(cert.rooting) +
              " depths=" + join_ints(cert.leaf_depths);
    } else {
        out = "equal_depth_class rooting=" + std::to_string(cert.rooting) +
              " class_depth=" + std::to_string(cert.class_depth) +
              " class_size=" + std::to_string(cert.class_size) +
              " h_k=" + std::to_string(cert.height_k);
    }
    return out;
}

// ---- lp ------------------------------------------------------------------

struct LpOpts {
    std::string input;
    bool csv = false;
};

int run_lp(const GlobalOpts& g, const LpOpts& o) {
    Tree tree = [&] {
        if (o.input == "-")
            return parse_tree(std::cin);
        std::ifstream in(o.input);
        if (!in)
            throw Error(ErrorKind::MalformedInput, "cannot open '" + o.input + "'");
        return parse_tree(in);
    }();
    LengthSet set = lp_set(tree);
    LowerBoundCertificate cert = certified_lower_bound(tree);
    Metrics met = metrics(tree);
    int leaves = static_cast<int>(tree.leaves().size());
    Output out(g.output);
    std::ostream& os = out.stream();
    if (o.csv) {
        write_csv_preamble(os, g, resolved_caps(g));
        os << "n,leaves,lp,diameter,lower_bound,certificate,lengths\n";
        os << tree.vertex_count() << ',' << leaves << ',' << set.size() << ',' << met.diameter
           << ',' << cert.bound << ',' << describe_certificate(cert) << ','
           << join_ints(set.values()) << "\n";
        return 0;
    }
    os << "lp=" << set.size() << " set={";
    const auto values = set.values();
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << values[i];
    os << "} bound>=" << cert.bound << "\n";
    os << "n=" << tree.vertex_count() << " leaves=" << leaves << " diameter=" << met.diameter
       << "\n";
    os << "certificate=" << describe_certificate(cert) << "\n";
    return 0;
}

// ---- rad -----------------------------------------------------------------

struct RadOpts {
    std::string seq;
    std::string witness;
};

int run_rad(const GlobalOpts& g, const RadOpts& o) {
    DegreeSequence s = DegreeSequence::validate(parse_int_list(o.seq));
    LayeredWitness wit = min_radius(s);
    LayeredWitness rooted = min_height(rooted_form(s));
    bool identity = wit.value == rooted.value;
    Output out(g.output);
    std::ostream& os = out.stream();
    os << "rad=" << wit.value << "\n";
    os << "rooted_height=" << rooted.value << "\n";
    os << "identity_ok=" << (identity ? 1 : 0) << "\n";
    if (!o.witness.empty()) {
        std::ofstream wout(o.witness);
        if (!wout)
            throw Error(ErrorKind::MalformedInput, "cannot open '" + o.witness + "'");
        wout << serialize_tree(wit.rooted.tree);
    }
    if (!identity) {
        std::cerr << "identity violation: rad(s)=" << wit.value
                  << " but rooted-form height=" << rooted.value << " for seq "
                  << join_ints(s.entries(), ',') << "\n";
        return 1;
    }
    return 0;
}

// ---- hk ------------------------------------------------------------------

struct HkOpts {
    std::string seq;
    int k = 1;
    std::string witness;
};

int run_hk(const GlobalOpts& g, const HkOpts& o) {
    OutDegreeSequence s = OutDegreeSequence::validate(parse_int_list(o.seq));
    ConstrainedHeight res = min_height_k(s, o.k);
    Output out(g.output);
    std::ostream& os = out.stream();
    os << "h_k=" << res.value << "\n";
    os << "k=" << o.k << "\n";
    os << "p=" << res.chosen_p << "\n";
    os << "reduced=" << join_ints(res.reduced.entries(), ',') << "\n";
    if (!o.witness.empty()) {
        std::ofstream wout(o.witness);
        if (!wout)
            throw Error(ErrorKind::MalformedInput, "cannot open '" + o.witness + "'");
        wout << serialize_tree(res.witness.rooted.tree);
    }
    return 0;
}

// ---- check ---------------------------------------------------------------

struct CheckOpts {
    int all_n = 0;
    int all_up_to = 0;
    std::string seq;
    std::string family;
    int delta = 3;
    std::string h = "1";
    bool dedupe = false;
    bool no_deg2 = false;
};

int run_check(const GlobalOpts& g, const CheckOpts& o) {
    int sources = (o.all_n > 0) + (o.all_up_to > 0) + !o.seq.empty() + !o.family.empty();
    if (sources != 1)
        throw Error(ErrorKind::InvalidParameter,
                    "pick exactly one of --all-n, --all-up-to, --seq, --family");
    oracle::EnumerationCaps caps = resolved_caps(g);
    if (o.all_n > 0 || o.all_up_to > 0) {
        int top = std::max(o.all_n, o.all_up_to);
        int cap = o.dedupe ? caps.deduped : caps.labeled;
        if (top > cap)
            throw Error(ErrorKind::CapExceeded, "corpus size " + std::to_string(top) +
                                                    " exceeds cap " + std::to_string(cap));
    }
    Output out(g.output);
    std::ostream& os = out.stream();
    write_csv_preamble(os, g, caps);
    os << "n,degree_sequence,rad_s,rad_s_prime,lp,diameter,theorem2_bound,satisfied\n";

    std::uint64_t rows = 0;
    std::uint64_t theorem1_violations = 0;
    std::uint64_t theorem2_violations = 0;
    std::uint64_t diameter_violations = 0;
    std::optional<int> max_gap_rad;
    std::optional<int> max_gap_rad_prime;

    auto emit = [&](const oracle::GapRecord& rec) -> bool {
        if (g_interrupted)
            return false;
        if (o.no_deg2 && rec.has_degree_2)
            return true;
        int delta = rec.degree_sequence.front();
        long long leaves = 0;
        for (int d : rec.degree_sequence)
            leaves += d == 1;
        bool th1_ok = delta < 3 || leaf_count_lower_bound(delta, leaves).satisfied_by(rec.lp_value);
        bool diam_ok = diameter_bound_satisfied(rec.lp_value, rec.diameter);
        if (!th1_ok) {
            ++theorem1_violations;
            std::cerr << "violation: theorem1 n=" << rec.n << " seq=("
                      << join_ints(rec.degree_sequence, ',') << ") lp=" << rec.lp_value << "\n";
        }
        if (!rec.satisfied) {
            ++theorem2_violations;
            std::cerr << "violation: theorem2 n=" << rec.n << " seq=("
                      << join_ints(rec.degree_sequence, ',') << ") lp=" << rec.lp_value
                      << " rad=" << rec.rad_s << "\n";
        }
        if (!diam_ok) {
            ++diameter_violations;
            std::cerr << "violation: diameter_bound n=" << rec.n << " lp=" << rec.lp_value
                      << " diameter=" << rec.diameter << "\n";
        }
        if (!rec.has_degree_2) {
            int gap = rec.rad_s - rec.lp_value;
            max_gap_rad = max_gap_rad ? std::max(*max_gap_rad, gap) : gap;
        }
        int gap_prime = rec.rad_s_prime - rec.lp_value;
        max_gap_rad_prime =
            max_gap_rad_prime ? std::max(*max_gap_rad_prime, gap_prime) : gap_prime;
        os << rec.n << ',' << join_ints(rec.degree_sequence) << ',' << rec.rad_s << ','
           << rec.rad_s_prime << ',' << rec.lp_value << ',' << rec.diameter << ','
           << format_double(rec.theorem2_bound) << ',' << (rec.satisfied ? 1 : 0) << "\n";
        ++rows;
        if (rows % (1u << 20) == 0)
            std::cerr << "progress: " << rows << " rows\n";
        return true;
    };

    if (!o.family.empty()) {
        if (o.family != "t_delta_h")
            throw Error(ErrorKind::InvalidParameter, "unknown check family '" + o.family + "'");
        auto [h_lo, h_hi] = parse_range(o.h);
        if (o.delta < 3 || h_lo < 1)
            throw Error(ErrorKind::InvalidParameter, "family needs delta >= 3 and h >= 1");
        for (int h = h_lo; h <= h_hi; ++h)
            if (!emit(oracle::evaluate_tree(make_t_delta_h(o.delta, h))))
                break;
    } else if (!o.seq.empty()) {
        oracle::EnumerationScope scope;
        scope.mode = oracle::EnumerationScope::Mode::TreesWithDegreeSequence;
        scope.seq = DegreeSequence::validate(parse_int_list(o.seq));
        scope.dedupe = o.dedupe;
        scope.caps = caps;
        oracle::gap_scan(scope, g.workers, emit);
    } else {
        int lo = o.all_n > 0 ? o.all_n : 2;
        int hi = o.all_n > 0 ? o.all_n : o.all_up_to;
        if (hi < lo)
            throw Error(ErrorKind::InvalidParameter, "--all-up-to needs a value >= 2");
        for (int n = lo; n <= hi && !g_interrupted; ++n) {
            oracle::EnumerationScope scope;
            scope.mode = oracle::EnumerationScope::Mode::AllTreesN;
            scope.n = n;
            scope.dedupe = o.dedupe;
            scope.caps = caps;
            oracle::gap_scan(scope, g.workers, emit);
        }
    }

    if (g_interrupted)
        os << "# interrupted\n";
    std::uint64_t violations = theorem1_violations + theorem2_violations + diameter_violations;
    std::cerr << "checked " << rows << " trees: theorem1_violations=" << theorem1_violations
              << " theorem2_violations=" << theorem2_violations
              << " diameter_violations=" << diameter_violations;
    if (max_gap_rad)
        std::cerr << " max_gap_rad=" << *max_gap_rad;
    if (max_gap_rad_prime)
        std::cerr << " max_gap_rad_prime=" << *max_gap_rad_prime;
    std::cerr << "\n";
    if (violations > 0)
        return 1;
    return g_interrupted ? 130 : 0;
}

// ---- fd ------------------------------------------------------------------

struct FdOpts {
    int D = 2;
    int n_cap = 12;
    std::string witness;
};

int run_fd(const GlobalOpts& g, const FdOpts& o) {
    oracle::EnumerationCaps caps = resolved_caps(g);
    oracle::FdUpper res = oracle::f_of_D_upper(o.D, o.n_cap, caps);
    bool lower_ok = diameter_bound_satisfied(res.value, o.D);
    Output out(g.output);
    std::ostream& os = out.stream();
    write_csv_preamble(os, g, caps);
    os << "D,n_cap,f_upper,bound_kind,witness_n,lower_bound_ok\n";
    os << o.D << ',' << o.n_cap << ',' << res.value << ",upper," << res.witness_n << ','
       << (lower_ok ? 1 : 0) << "\n";
    std::cerr << "f(" << o.D << ") <= " << res.value << " (upper bound from trees on <= "
              << o.n_cap << " vertices; witness has " << res.witness_n << ")\n";
    if (!o.witness.empty()) {
        std::ofstream wout(o.witness);
        if (!wout)
            throw Error(ErrorKind::MalformedInput, "cannot open '" + o.witness + "'");
        wout << serialize_tree(res.witness);
    }
    return lower_ok ? 0 : 1;
}

// ---- kraft ---------------------------------------------------------------

struct KraftOpts {
    int leaf_cap = 10;
};

int run_kraft(const GlobalOpts& g, const KraftOpts& o) {
    KraftSurvey survey = kraft_survey(o.leaf_cap);
    Output out(g.output);
    std::ostream& os = out.stream();
    write_csv_preamble(os, g, resolved_caps(g));
    os << "leaves,shape_id,sum_numerator,sum_exponent,bound,equality,perfect,"
          "every_internal_has_2_children\n";
    std::uint64_t full_equality = 0;
    for (const auto& row : survey.rows) {
        os << row.leaves << ',' << row.shape_id << ',' << row.result.sum.numerator().str() << ','
           << row.result.sum.exponent() << ',' << row.result.bound.to_string() << ','
           << (row.result.equality ? 1 : 0) << ',' << (row.perfect ? 1 : 0) << ','
           << (row.every_internal_two ? 1 : 0) << "\n";
        if (row.result.equality && row.every_internal_two)
            ++full_equality;
    }
    std::cerr << "shapes=" << survey.rows.size() << " equality=" << survey.equality_count
              << " violations=" << survey.violation_count
              << " perfect_always_equality=" << (survey.perfect_always_equality ? 1 : 0)
              << " equality_and_full=" << full_equality << "\n";
    return survey.violation_count == 0 ? 0 : 1;
}

// ---- gen -----------------------------------------------------------------

struct GenOpts {
    std::string family;
    int delta = 3;
    int h = 1;
    int depth = 0;
    int leaves = 1;
    std::string seq;
};

int run_gen(const GlobalOpts& g, const GenOpts& o) {
    FamilySpec spec;
    if (o.family == "t_delta_h") {
        spec.family = FamilySpec::Family::CompleteDary;
        spec.delta = o.delta;
        spec.h = o.h;
    } else if (o.family == "perfect_binary") {
        spec.family = FamilySpec::Family::PerfectBinary;
        spec.depth = o.depth;
    } else if (o.family == "binary_random") {
        spec.family = FamilySpec::Family::BinaryRandom;
        spec.leaves = o.leaves;
    } else if (o.family == "random_degrees") {
        spec.family = FamilySpec::Family::DegreeSeqRandom;
        spec.seq = DegreeSequence::validate(parse_int_list(o.seq));
    } else {
        throw Error(ErrorKind::InvalidParameter, "unknown family '" + o.family + "'");
    }
    spec.seed = g.seed;
    Tree tree = spec.build();
    Output out(g.output);
    out.stream() << serialize_tree(tree);
    std::cerr << spec.describe() << ": n=" << tree.vertex_count() << "\n";
    return 0;
}

// ---- enum ----------------------------------------------------------------

struct EnumOpts {
    int n = 0;
    std::string seq;
    int D = 0;
    int n_cap = 0;
    bool dedupe = false;
    bool count_only = false;
};

int run_enum(const GlobalOpts& g, const EnumOpts& o) {
    oracle::EnumerationCaps caps = resolved_caps(g);
    oracle::EnumerationScope scope;
    scope.caps = caps;
    scope.dedupe = o.dedupe;
    int sources = (o.n > 0) + !o.seq.empty() + (o.D > 0);
    if (sources != 1)
        throw Error(ErrorKind::InvalidParameter, "pick exactly one of --n, --seq, --D");
    if (o.n > 0) {
        scope.mode = oracle::EnumerationScope::Mode::AllTreesN;
        scope.n = o.n;
    } else if (!o.seq.empty()) {
        scope.mode = oracle::EnumerationScope::Mode::TreesWithDegreeSequence;
        scope.seq = DegreeSequence::validate(parse_int_list(o.seq));
    } else {
        scope.mode = oracle::EnumerationScope::Mode::NoDegree2DiameterD;
        scope.diameter_d = o.D;
        scope.n_cap = o.n_cap > 0 ? o.n_cap : caps.deduped;
    }
    Output out(g.output);
    std::ostream& os = out.stream();
    write_csv_preamble(os, g, caps);
    if (o.count_only) {
        os << "count\n" << oracle::count_trees(scope) << "\n";
        return 0;
    }
    os << "index,n,edges\n";
    std::uint64_t index = 0;
    oracle::enumerate_trees(scope, [&](const Tree& t) {
        if (g_interrupted)
            return false;
        os << index++ << ',' << t.vertex_count() << ',';
        const auto edges = t.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            os << (i ? " " : "") << edges[i].first << '-' << edges[i].second;
        os << "\n";
        if (index % (1u << 20) == 0)
            std::cerr << "progress: " << index << " trees\n";
        return true;
    });
    if (g_interrupted) {
        os << "# interrupted\n";
        return 130;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    std::signal(SIGINT, handle_interrupt);
    GlobalOpts g;
    for (int i = 0; i < argc; ++i) {
        if (i)
            g.command_line += ' ';
        g.command_line += argv[i];
    }

    CLI::App app{"leaf-to-leaf path length toolkit"};
    app.require_subcommand(1);
    app.add_option("--workers", g.workers, "worker threads for labeled enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--labeled-cap", g.labeled_cap, "max n for labeled enumeration");
    app.add_option("--deduped-cap", g.deduped_cap, "max n for shape enumeration");
    app.add_option("--seed", g.seed, "seed for randomized generators");
    app.add_option("-o,--output", g.output, "output file ('-' for stdout)");

    LpOpts lp_opts;
    auto* sub_lp = app.add_subcommand("lp", "path length set of a tree file");
    sub_lp->fallthrough();
    sub_lp->add_option("input", lp_opts.input, "edge list file, '-' for stdin")->required();
    sub_lp->add_flag("--csv", lp_opts.csv, "CSV output");

    RadOpts rad_opts;
    auto* sub_rad = app.add_subcommand("rad", "minimum radius for a degree sequence");
    sub_rad->fallthrough();
    sub_rad->add_option("--seq", rad_opts.seq, "degrees, comma separated")->required();
    sub_rad->add_option("--witness", rad_opts.witness, "write a realizing tree here");

    HkOpts hk_opts;
    auto* sub_hk = app.add_subcommand("hk", "constrained minimum height h(s+,k)");
    sub_hk->fallthrough();
    sub_hk->add_option("--seq", hk_opts.seq, "out-degrees, comma separated")->required();
    sub_hk->add_option("--k", hk_opts.k, "required leaf count")->required();
    sub_hk->add_option("--witness", hk_opts.witness, "write a realizing tree here");

    CheckOpts check_opts;
    auto* sub_check = app.add_subcommand("check", "verify bounds over a corpus, CSV report");
    sub_check->set_help_flag("--help", "print help");  // frees -h for the --h option
    sub_check->fallthrough();
    sub_check->add_option("--all-n", check_opts.all_n, "all trees on exactly n vertices");
    sub_check->add_option("--all-up-to", check_opts.all_up_to, "all trees with 2..n vertices");
    sub_check->add_option("--seq", check_opts.seq, "trees with this degree sequence");
    sub_check->add_option("--family", check_opts.family, "generated family (t_delta_h)");
    sub_check->add_option("--delta", check_opts.delta, "family degree");
    sub_check->add_option("--h", check_opts.h, "family height or range like 1..6");
    sub_check->add_flag("--dedupe", check_opts.dedupe, "one tree per unlabeled shape");
    sub_check->add_flag("--no-deg2", check_opts.no_deg2, "only trees without degree-2 vertices");

    FdOpts fd_opts;
    auto* sub_fd = app.add_subcommand("fd", "upper bound on f(D) with witness");
    sub_fd->alias("fD");
    sub_fd->fallthrough();
    sub_fd->add_option("--D", fd_opts.D, "target diameter")->required();
    sub_fd->add_option("--n-cap", fd_opts.n_cap, "max vertices to enumerate");
    sub_fd->add_option("--witness", fd_opts.witness, "write the witness tree here");

    KraftOpts kraft_opts;
    auto* sub_kraft = app.add_subcommand("kraft", "dyadic path-length sums of binary shapes");
    sub_kraft->fallthrough();
    sub_kraft->add_option("--leaf-cap", kraft_opts.leaf_cap, "max leaf count (<= 10)");

    GenOpts gen_opts;
    auto* sub_gen = app.add_subcommand("gen", "emit a tree from a named family");
    sub_gen->set_help_flag("--help", "print help");  // frees -h for the --h option
    sub_gen->fallthrough();
    sub_gen->add_option("--family", gen_opts.family,
                        "t_delta_h | perfect_binary | binary_random | random_degrees")
        ->required();
    sub_gen->add_option("--delta", gen_opts.delta, "degree for t_delta_h");
    sub_gen->add_option("--h", gen_opts.h, "height for t_delta_h");
    sub_gen->add_option("--depth", gen_opts.depth, "depth for perfect_binary");
    sub_gen->add_option("--leaves", gen_opts.leaves, "leaf count for binary_random");
    sub_gen->add_option("--seq", gen_opts.seq, "degrees for random_degrees");

    EnumOpts enum_opts;
    auto* sub_enum = app.add_subcommand("enum", "stream an enumerated corpus");
    sub_enum->fallthrough();
    sub_enum->add_option("--n", enum_opts.n, "all trees on exactly n vertices");
    sub_enum->add_option("--seq", enum_opts.seq, "trees with this degree sequence");
    sub_enum->add_option("--D", enum_opts.D, "degree-2-free trees with this diameter");
    sub_enum->add_option("--n-cap", enum_opts.n_cap, "size cap for --D mode");
    sub_enum->add_flag("--dedupe", enum_opts.dedupe, "one tree per unlabeled shape");
    sub_enum->add_flag("--count-only", enum_opts.count_only, "emit only the total count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub_lp->parsed())
            return run_lp(g, lp_opts);
        if (sub_rad->parsed())
            return run_rad(g, rad_opts);
        if (sub_hk->parsed())
            return run_hk(g, hk_opts);
        if (sub_check->parsed())
            return run_check(g, check_opts);
        if (sub_fd->parsed())
            return run_fd(g, fd_opts);
        if (sub_kraft->parsed())
            return run_kraft(g, kraft_opts);
        if (sub_gen->parsed())
            return run_gen(g, gen_opts);
        if (sub_enum->parsed())
            return run_enum(g, enum_opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << " [" << error_kind_name(e.kind()) << "]\n";
        return e.kind() == ErrorKind::CapExceeded ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
