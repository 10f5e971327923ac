// wheelwalk: exact hitting times and arborescence counts on the directed wheel.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 scale/limit error.

#include "render.hpp"

#include <wheelwalk/wheelwalk.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace wheelwalk;
using cli::Format;
using cli::ResultSet;
using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string format = "table";
    int digits = -1;
    std::string out;
};

void add_output_options(CLI::App* sub, OutputOptions& o) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--digits", o.digits, "Add a decimal column rounded to this many digits")
        ->check(CLI::Range(0, 1000));
    sub->add_option("--out", o.out, "Write the rendered output to this file instead of stdout");
}

std::uint64_t parse_seed(const std::string& text, const char* what) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (!text.empty() && text[0] != '-') v = std::stoull(text, &used, 10);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size()) throw UsageError(std::string(what) + " must be an unsigned 64-bit integer, got '" + text + "'");
    return v;
}

// --seed if given, else WHEELWALK_SEED, else 0.
std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
    if (flag) return parse_seed(*flag, "--seed");
    if (const char* env = std::getenv("WHEELWALK_SEED")) return parse_seed(env, "WHEELWALK_SEED");
    return 0;
}

Json meta(std::optional<std::uint64_t> seed = std::nullopt) {
    Json m;
    m["tool_version"] = wheelwalk::version;
    if (seed) m["seed"] = *seed;
    return m;
}

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// ---------------------------------------------------------------------------

struct HitOptions {
    std::int64_t n = 0;
    std::optional<std::int64_t> ell;
    std::string method = "formula";
    std::uint64_t samples = 1000000;
    std::optional<std::string> seed;
    std::uint64_t max_steps = mc::default_max_steps;
};

hitting::Method exact_method(const std::string& m) {
    if (m == "formula") return hitting::Method::closed_form;
    if (m == "solve") return hitting::Method::solve_reduced;
    if (m == "fold") return hitting::Method::solve_folded;
    return hitting::Method::via_inverse;
}

// `capped` receives the number of Monte Carlo walks cut off by the step cap.
ResultSet run_hit(const HitOptions& o, const OutputOptions& out, std::uint64_t& capped) {
    require_wheel_size(o.n);
    if (o.ell) hitting::HittingQuery{o.n, *o.ell}.validate();

    ResultSet r;
    Json params;
    params["n"] = o.n;
    if (o.ell) params["ell"] = *o.ell;
    params["method"] = o.method;
    r.document["command"] = "hit";

    if (o.method == "mc") {
        const std::uint64_t seed = resolve_seed(o.seed);
        params["samples"] = o.samples;
        params["max_steps"] = o.max_steps;
        r.document["params"] = params;
        r.columns = {"ell", "mean", "std_err", "samples", "hit_target_fraction", "cap_hits"};
        r.bare_single_row = false;
        Json results = Json::array();
        const std::int64_t lo = o.ell.value_or(1), hi = o.ell.value_or(o.n - 1);
        for (std::int64_t ell = lo; ell <= hi; ++ell) {
            const mc::SimStats s = mc::simulate({o.n, ell, o.samples, seed, o.max_steps});
            capped += s.cap_hits;
            r.rows.push_back({std::to_string(ell), fixed(s.mean), fixed(s.std_err), std::to_string(s.samples),
                              fixed(s.hit_target_fraction), std::to_string(s.cap_hits)});
            Json item;
            item["ell"] = ell;
            item["value"] = s.mean;
            item["method"] = "mc";
            item["std_err"] = s.std_err;
            item["samples"] = s.samples;
            item["hit_target_fraction"] = s.hit_target_fraction;
            item["cap_hits"] = s.cap_hits;
            results.push_back(item);
        }
        r.document["results"] = results;
        r.document["meta"] = meta(seed);
        return r;
    }

    r.document["params"] = params;
    const hitting::Method method = exact_method(o.method);
    std::vector<hitting::HittingResult> values;
    if (o.ell)
        values.push_back(hitting::hitting_time({o.n, *o.ell}, method));
    else
        values = hitting::all_hitting_times(o.n, method);

    r.columns = {"ell", "value"};
    if (out.digits >= 0) r.columns.push_back("decimal");
    Json results = Json::array();
    for (const auto& v : values) {
        std::vector<std::string> row{std::to_string(v.query.ell), to_string(v.value)};
        Json item;
        item["ell"] = v.query.ell;
        item["value"] = to_string(v.value);
        item["method"] = hitting::method_name(v.method);
        if (out.digits >= 0) {
            row.push_back(to_decimal(v.value, out.digits));
            item["decimal"] = row.back();
        }
        r.rows.push_back(std::move(row));
        results.push_back(item);
    }
    r.bare_single_row = values.size() == 1;
    r.document["results"] = results;
    r.document["meta"] = meta();
    return r;
}

// ---------------------------------------------------------------------------

struct TreeOptions {
    std::int64_t n = 0;
    std::string root = "hub";
    std::string direction = "in";
    std::string method = "cofactor";
};

ResultSet run_trees(const TreeOptions& o) {
    require_wheel_size(o.n);
    const VertexId root = VertexId::parse(o.root);
    const trees::Direction dir = trees::parse_direction(o.direction);
    const trees::TreeQuery q{DirectedWheel(o.n), root, dir};
    if (!q.wheel.contains(root)) throw DomainError("root " + root.str() + " is not in W_" + std::to_string(o.n) + "^D");

    Integer count;
    if (o.method == "cofactor") {
        count = trees::count_via_cofactor(q);
    } else if (o.method == "enumerate") {
        count = trees::enumerate(q);
    } else if (dir == trees::Direction::out) {
        count = trees::out_trees_closed_form(o.n, root);
    } else if (root.is_hub()) {
        count = trees::in_trees_closed_form(o.n);
    } else {
        throw UsageError("no closed form for in-trees rooted at a cycle vertex; use --method cofactor or enumerate");
    }

    ResultSet r;
    r.columns = {"root", "direction", "value"};
    r.rows.push_back({root.str(), o.direction, to_string(count)});
    r.document["command"] = "trees";
    r.document["params"] = {{"n", o.n}, {"root", root.str()}, {"direction", o.direction}, {"method", o.method}};
    Json item;
    item["root"] = root.str();
    item["direction"] = o.direction;
    item["value"] = to_string(count);
    item["method"] = o.method;
    r.document["results"] = Json::array({item});
    r.document["meta"] = meta();
    return r;
}

// ---------------------------------------------------------------------------

struct SeqOptions {
    std::string kind;
    std::string index;
};

ResultSet run_seq(const SeqOptions& o) {
    std::size_t used = 0;
    long long i = 0;
    try {
        i = std::stoll(o.index, &used, 10);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != o.index.size()) throw UsageError("index must be an integer, got '" + o.index + "'");
    const Integer v = o.kind == "fib" ? seq::fib(i) : seq::lucas(i);

    ResultSet r;
    r.columns = {"index", "value"};
    r.rows.push_back({std::to_string(i), to_string(v)});
    r.document["command"] = "seq";
    r.document["params"] = {{"kind", o.kind}, {"i", i}};
    Json item;
    item["index"] = i;
    item["value"] = to_string(v);
    item["method"] = o.kind;
    r.document["results"] = Json::array({item});
    r.document["meta"] = meta();
    return r;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::int64_t n_max = 50;
    std::int64_t enum_max = 7;
    std::uint64_t mc_samples = 200000;
    std::optional<std::string> seed;
    std::string fault = "none";
};

ResultSet run_verify(const VerifyOptions& o, bool& passed) {
    verify::VerifyConfig cfg;
    cfg.n_max = o.n_max;
    cfg.enum_max = o.enum_max;
    cfg.mc_samples = o.mc_samples;
    cfg.seed = resolve_seed(o.seed);
    cfg.fault = verify::parse_fault(o.fault);
    const verify::VerifyReport report = verify::run_all(cfg);
    passed = report.passed();

    ResultSet r;
    r.bare_single_row = false;
    r.columns = {"status", "check", "range", "counterexample"};
    Json results = Json::array();
    std::size_t ok = 0;
    for (const auto& c : report.checks) {
        ok += c.passed;
        r.rows.push_back({c.passed ? "PASS" : "FAIL", c.name, c.range, c.counterexample});
        Json item;
        item["name"] = c.name;
        item["range"] = c.range;
        item["passed"] = c.passed;
        item["counterexample"] = c.counterexample.empty() ? Json(nullptr) : Json(c.counterexample);
        if (!c.note.empty()) item["note"] = c.note;
        results.push_back(item);
    }
    if (const auto* f = report.first_failure())
        r.footer.push_back("first failure: " + f->name + ": " + f->counterexample);
    r.footer.push_back("Monte Carlo checks are statistical (false-failure rate < 1e-4 each); on failure rerun with a fresh --seed.");
    r.footer.push_back(std::string("overall: ") + (passed ? "PASS" : "FAIL") + " (" + std::to_string(ok) + "/" +
                       std::to_string(report.checks.size()) + " checks)");

    r.document["command"] = "verify";
    Json params;
    params["n_max"] = o.n_max;
    params["enum_max"] = o.enum_max;
    params["mc_samples"] = o.mc_samples;
    if (cfg.fault != verify::Fault::none) params["inject_fault"] = o.fault;
    r.document["params"] = params;
    r.document["status"] = passed ? "pass" : "fail";
    r.document["results"] = results;
    r.document["meta"] = meta(cfg.seed);
    return r;
}

void emit(const ResultSet& r, const OutputOptions& o) {
    const std::string text = cli::render(r, cli::parse_format(o.format));
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    file << text;
    if (!file) throw LimitError("cannot write " + o.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact hitting times and spanning-tree counts on the directed wheel W_N^D"};
    app.require_subcommand(1);
    app.set_version_flag("--version", wheelwalk::version);

    OutputOptions out;

    HitOptions hit;
    auto* hit_cmd = app.add_subcommand("hit", "Average hitting time h(W_N^D; 0, l)");
    hit_cmd->add_option("--n", hit.n, "Cycle length N (>= 3)")->required();
    hit_cmd->add_option("--ell", hit.ell, "Target vertex l (default: every l = 1..N-1)");
    hit_cmd->add_option("--method", hit.method, "Computation route")
        ->check(CLI::IsMember({"formula", "solve", "fold", "inverse", "mc"}));
    hit_cmd->add_option("--samples", hit.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    hit_cmd->add_option("--seed", hit.seed, "Monte Carlo seed (default: $WHEELWALK_SEED or 0)");
    hit_cmd->add_option("--max-steps", hit.max_steps, "Monte Carlo per-walk step cap")->check(CLI::PositiveNumber);
    add_output_options(hit_cmd, out);

    TreeOptions tree;
    auto* trees_cmd = app.add_subcommand("trees", "Weighted count of spanning arborescences");
    trees_cmd->add_option("--n", tree.n, "Cycle length N (>= 3)")->required();
    trees_cmd->add_option("--root", tree.root, "Root vertex: hub or cycle:<k>");
    trees_cmd->add_option("--direction", tree.direction, "in or out")->check(CLI::IsMember({"in", "out"}));
    trees_cmd->add_option("--method", tree.method, "Counting route")
        ->check(CLI::IsMember({"cofactor", "formula", "enumerate"}));
    add_output_options(trees_cmd, out);

    SeqOptions sq;
    auto* seq_cmd = app.add_subcommand("seq", "Fibonacci or Lucas number");
    seq_cmd->add_option("kind", sq.kind, "fib or lucas")->required()->check(CLI::IsMember({"fib", "lucas"}));
    seq_cmd->add_option("i", sq.index, "Index (>= 0)")->required();
    add_output_options(seq_cmd, out);

    VerifyOptions ver;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-validate every engine");
    verify_cmd->add_option("--n-max", ver.n_max, "Largest N for the exact suites")->check(CLI::Range(3, 100000));
    verify_cmd->add_option("--enum-max", ver.enum_max, "Largest N for brute-force enumeration")
        ->check(CLI::Range(3, 1000));
    verify_cmd->add_option("--mc-samples", ver.mc_samples, "Samples per Monte Carlo check")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40));
    verify_cmd->add_option("--seed", ver.seed, "Seed for the randomised checks (default: $WHEELWALK_SEED or 0)");
    verify_cmd->add_option("--inject-fault", ver.fault, "Corrupt one engine to exercise the failure path")
        ->check(CLI::IsMember({"none", "folded-sign", "closed-form", "tree-direction"}))
        ->group("");
    add_output_options(verify_cmd, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*hit_cmd) {
            std::uint64_t capped = 0;
            emit(run_hit(hit, out, capped), out);
            if (capped) {
                std::cerr << "error: " << capped << " walks exceeded the step cap of " << hit.max_steps << '\n';
                return exit_limit;
            }
        } else if (*trees_cmd) {
            emit(run_trees(tree), out);
        } else if (*seq_cmd) {
            emit(run_seq(sq), out);
        } else if (*verify_cmd) {
            bool passed = false;
            emit(run_verify(ver, passed), out);
            return passed ? exit_ok : exit_verify_failed;
        }
    } catch (const ScaleError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_limit;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_limit;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
