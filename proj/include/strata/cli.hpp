#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "strata/arf.hpp"
#include "strata/billiard.hpp"
#include "strata/double_cover.hpp"
#include "strata/enumerate.hpp"
#include "strata/selftest.hpp"
#include "strata/spin.hpp"
#include "strata/stratum.hpp"

namespace strata::cli {

using json = nlohmann::ordered_json;

// Exit codes: 0 success, 2 usage/validation error, 3 internal cross-route
// disagreement (never expected).
constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kDisagreement = 3;

namespace detail {

inline void emit(std::ostream& out, const json& report, bool as_json) {
    if (as_json) {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : report.items()) {
        if (key == "command") continue;
        if (key == "warnings") {
            for (const auto& w : value) out << "warning: " << w.get<std::string>() << '\n';
            continue;
        }
        if (value.is_string())
            out << key << ": " << value.get<std::string>() << '\n';
        else if (value.is_null())
            out << key << ": unknown\n";
        else
            out << key << ": " << value.dump() << '\n';
    }
}

inline json nonempty_json(const StratumFacts& facts) {
    if (!facts.nonempty.has_value()) return nullptr;
    return *facts.nonempty;
}

inline std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string token = text.substr(pos, next - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(token, &used));
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw Error(ErrorKind::syntax, "expected a comma-separated integer list, got '" + token + "'",
                        pos + 1);
        }
        pos = next + 1;
        if (next == text.size()) break;
    }
    return values;
}

inline int parallelism() {
    const char* env = std::getenv("STRATA_JOBS");
    if (env == nullptr) return 1;
    const int jobs = std::atoi(env);
    return jobs < 1 ? 1 : (jobs > 64 ? 64 : jobs);
}

/// Deterministic parallel map: results are merged by index, so the output is
/// independent of the degree of parallelism.
template <typename T, typename F>
std::vector<json> map_rows(const std::vector<T>& inputs, F&& fn) {
    std::vector<json> rows(inputs.size());
    const int jobs = parallelism();
    if (jobs <= 1 || inputs.size() < 2) {
        for (std::size_t i = 0; i < inputs.size(); ++i) rows[i] = fn(inputs[i]);
        return rows;
    }
    const std::size_t chunk = (inputs.size() + jobs - 1) / static_cast<std::size_t>(jobs);
    std::vector<std::future<void>> work;
    for (std::size_t begin = 0; begin < inputs.size(); begin += chunk) {
        const std::size_t end = std::min(begin + chunk, inputs.size());
        work.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i) rows[i] = fn(inputs[i]);
        }));
    }
    for (auto& w : work) w.get();
    return rows;
}

inline int cmd_stratum_info(const std::string& pattern_text, bool as_json, std::ostream& out) {
    const Pattern p = parse_pattern(pattern_text);
    const StratumFacts facts = stratum_facts(p);
    const SpinStatus spin = spin_defined(p);
    json report;
    report["command"] = "stratum info";
    report["pattern"] = format_pattern(p);
    report["flavor"] = std::string(to_string(p.flavor()));
    report["genus"] = facts.genus;
    report["dimension"] = facts.dimension;
    report["nonempty"] = nonempty_json(facts);
    report["connectedness"] = facts.connectedness.str();
    report["spin_defined"] = spin.defined;
    json warnings = json::array();
    if (facts.nonempty.has_value() && !*facts.nonempty)
        warnings.push_back("the stratum is empty (one of the four Masur-Smillie exceptions)");
    if (!spin.defined) warnings.push_back("spin structure undefined: " + spin.reason);
    report["warnings"] = warnings;
    emit(out, report, as_json);
    return kOk;
}

inline int cmd_cover(const std::string& pattern_text, bool keep_marked, bool as_json, std::ostream& out) {
    const Pattern p = parse_pattern(pattern_text);
    const CoverData data = cover_pattern(p, keep_marked);
    json report;
    report["command"] = "cover";
    report["base"] = format_pattern(data.base);
    report["cover"] = format_pattern(data.cover);
    report["ramification_count"] = data.ramification_count;
    report["cover_genus"] = data.cover_genus;
    report["h1_dim"] = data.h1_dim;
    report["square_candidate"] = data.square_candidate;
    json warnings = json::array();
    if (data.square_candidate)
        warnings.push_back(
            "all orders are even: a differential in this stratum could be a global square, "
            "in which case the cover is disconnected");
    report["warnings"] = warnings;
    emit(out, report, as_json);
    return kOk;
}

inline int cmd_spin(const std::string& pattern_text, bool as_json, std::ostream& out, std::ostream& err) {
    const Pattern p = parse_pattern(pattern_text);
    if (!p.is_quadratic())
        throw Error(ErrorKind::flavor, "spin expects a quadratic pattern; Abelian strata have no single parity");
    const SpinStatus status = spin_defined(p);
    const ResidueCounts counts = residue_counts(p);
    const SpinParity closed = spin_parity_closed(p);
    const SpinParity sum = status.defined ? spin_parity_sum(odd_orders(p)) : SpinParity::undefined(status.reason);
    const SpinParity via_arf = spin_parity_arf(p);
    const bool agree = (closed == sum && sum == via_arf);

    json report;
    report["command"] = "spin";
    report["pattern"] = format_pattern(p);
    report["defined"] = status.defined;
    report["parity"] = closed.str();
    report["n_plus"] = counts.n_plus;
    report["n_minus"] = counts.n_minus;
    report["route_closed"] = closed.str();
    report["route_sum"] = sum.str();
    report["route_arf"] = via_arf.str();
    report["routes_agree"] = agree;
    json warnings = json::array();
    if (!status.defined) warnings.push_back("spin structure undefined: " + status.reason);
    if (is_nonempty(p) == false)
        warnings.push_back("the stratum is empty (one of the four Masur-Smillie exceptions)");
    report["warnings"] = warnings;
    emit(out, report, as_json);
    if (!agree) {
        err << "error: routes: spin-parity routes disagree on " << format_pattern(p) << '\n';
        return kDisagreement;
    }
    return kOk;
}

inline int cmd_arf_chain(const std::string& orders_text, bool as_json, std::ostream& out) {
    const std::vector<long long> orders = parse_int_list(orders_text);
    const Z2QuadraticForm form = chain_form(orders);
    const SymplecticBasis basis = symplectic_basis(form.intersection);
    const int invariant = arf(form);

    json report;
    report["command"] = "arf chain";
    report["orders"] = orders;
    report["rank"] = form.rank();
    json rows = json::array();
    for (std::size_t r = 0; r < form.rank(); ++r) rows.push_back(form.intersection.row(r).str());
    report["intersection"] = rows;
    report["values"] = form.values.str();
    json alpha = json::array(), beta = json::array();
    for (std::size_t i = 0; i < basis.pairs(); ++i) {
        alpha.push_back(basis.a[i].str());
        beta.push_back(basis.b[i].str());
    }
    report["basis_alpha"] = alpha;
    report["basis_beta"] = beta;
    report["arf"] = invariant;
    report["parity"] = SpinParity::from_bit(invariant).str();
    report["warnings"] = json::array();
    emit(out, report, as_json);
    return kOk;
}

inline int cmd_arf_count(int genus_arg, int bound, bool as_json, std::ostream& out) {
    const ArfCounts counts = count_arf(genus_arg, bound);
    json report;
    report["command"] = "arf count";
    report["genus"] = genus_arg;
    report["arf0"] = counts.arf0;
    report["arf1"] = counts.arf1;
    report["total"] = counts.arf0 + counts.arf1;
    report["warnings"] = json::array();
    emit(out, report, as_json);
    return kOk;
}

inline int cmd_billiard(const std::string& angles_text, bool relax, bool as_json, std::ostream& out,
                        std::ostream& err) {
    const BilliardTable table = BilliardTable::parse(angles_text, relax);
    const UnfoldingReport rep = classify(table);
    json report;
    report["command"] = "billiard classify";
    json angles = json::array();
    for (const auto& a : table.angles) angles.push_back(a.str());
    report["angles"] = angles;
    report["N"] = rep.N;
    report["genus"] = rep.genus;
    report["abelian_pattern"] = format_pattern(rep.abelian_pattern);
    report["fake_zero_count"] = rep.fake_zero_count;
    report["quadratic_pattern"] = format_pattern(rep.quadratic_pattern);
    report["Q"] = rep.Q;
    report["is_abelian_square"] = rep.is_abelian_square;
    report["spin"] = rep.spin.str();
    report["component_label"] = rep.component_label;
    report["hyperelliptic_parity"] = rep.hyperelliptic_parity.str();
    report["hyperelliptic_verdict"] = rep.hyperelliptic_verdict;
    report["routes_agree"] = rep.routes_agree;
    report["cover_consistent"] = rep.cover_consistent;
    json warnings = json::array();
    if (!rep.spin.defined()) warnings.push_back("spin structure undefined: " + rep.spin.reason());
    report["warnings"] = warnings;
    emit(out, report, as_json);
    if (!rep.routes_agree || !rep.cover_consistent) {
        err << "error: routes: billiard cross-checks disagree\n";
        return kDisagreement;
    }
    return kOk;
}

inline int cmd_enumerate(const std::string& flavor, const EnumerationOptions& opt, bool as_json,
                         std::ostream& out) {
    if (flavor != "Q")
        throw Error(ErrorKind::flavor, "enumeration supports --flavor Q only (the Abelian fact base is out of scope)");
    const std::vector<Pattern> patterns = enumerate_quadratic(opt);
    const std::vector<json> rows = map_rows(patterns, [](const Pattern& p) {
        const StratumFacts facts = stratum_facts(p);
        json row;
        row["pattern"] = format_pattern(p);
        row["sum"] = p.order_sum();
        row["genus"] = facts.genus;
        row["dimension"] = facts.dimension;
        row["nonempty"] = nonempty_json(facts);
        row["connectedness"] = facts.connectedness.str();
        row["spin"] = spin_parity_closed(p).str();
        return row;
    });
    if (as_json) {
        json report;
        report["command"] = "enumerate";
        report["flavor"] = flavor;
        report["max_sum"] = opt.max_sum;
        report["max_poles"] = opt.max_poles;
        report["max_marked"] = opt.max_marked;
        report["count"] = patterns.size();
        report["patterns"] = rows;
        out << report.dump(2) << '\n';
    } else {
        for (const auto& row : rows) {
            out << row["pattern"].get<std::string>() << "  sum=" << row["sum"].dump()
                << " genus=" << row["genus"].dump() << " dim=" << row["dimension"].dump()
                << " nonempty=" << row["nonempty"].dump() << " connectedness=" << row["connectedness"].get<std::string>()
                << " spin=" << row["spin"].get<std::string>() << '\n';
        }
        out << patterns.size() << " patterns\n";
    }
    return kOk;
}

inline int cmd_selftest(bool as_json, std::ostream& out) {
    const std::vector<selftest::CriterionResult> results = selftest::run_all();
    bool all_pass = true;
    if (as_json) {
        json report;
        report["command"] = "selftest";
        json rows = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            json row;
            row["id"] = r.id;
            row["name"] = r.name;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            rows.push_back(row);
        }
        report["criteria"] = rows;
        report["all_pass"] = all_pass;
        out << report.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            char line[160];
            std::snprintf(line, sizeof line, "[%2d] %s  %s", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str());
            out << line << "  (" << static_cast<long long>(r.elapsed_ms + 0.5) << " ms";
            if (!r.detail.empty()) out << "; " << r.detail;
            out << ")\n";
        }
        out << (all_pass ? "selftest: all criteria passed\n" : "selftest: FAILURES\n");
    }
    return all_pass ? kOk : kDisagreement;
}

}  // namespace detail

/// Entry point behind the `strata` binary; also directly testable.
/// `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact invariants of strata of Abelian and quadratic differentials", "strata"};
    app.require_subcommand(1);
    bool as_json = false;

    std::string pattern_text;
    auto* stratum = app.add_subcommand("stratum", "Stratum-level facts");
    stratum->require_subcommand(1);
    auto* info = stratum->add_subcommand("info", "Genus, dimension, non-emptiness and component facts");
    info->add_option("pattern", pattern_text, "Pattern, e.g. \"Q(-1,9)\" or \"H(2,4)\"")->required();
    info->add_flag("--json", as_json, "JSON output");

    std::string cover_text;
    bool keep_marked = false;
    auto* cover = app.add_subcommand("cover", "Orientation double cover of a quadratic pattern");
    cover->add_option("pattern", cover_text, "Quadratic pattern")->required();
    cover->add_flag("--keep-marked", keep_marked, "Retain images of marked points in the cover pattern");
    cover->add_flag("--json", as_json, "JSON output");

    std::string spin_text;
    auto* spin = app.add_subcommand("spin", "Spin parity by three independent routes");
    spin->add_option("pattern", spin_text, "Quadratic pattern")->required();
    spin->add_flag("--json", as_json, "JSON output");

    auto* arf = app.add_subcommand("arf", "Z2 quadratic-form engine");
    arf->require_subcommand(1);
    std::string chain_text;
    auto* chain = arf->add_subcommand("chain", "Chain form, symplectic basis and Arf invariant of odd orders");
    chain->add_option("orders", chain_text, "Comma-separated odd orders, e.g. \"1,1,1,1\"")->required();
    chain->add_flag("--json", as_json, "JSON output");
    int genus_arg = 0;
    int genus_bound = 6;
    auto* count = arf->add_subcommand("count", "Count forms on the standard symplectic space by Arf value");
    count->add_option("--genus", genus_arg, "Genus g (enumerates 2^(2g) forms)")->required();
    count->add_option("--max-genus", genus_bound, "Enumeration bound (default 6)");
    count->add_flag("--json", as_json, "JSON output");

    auto* billiard = app.add_subcommand("billiard", "Rational billiard unfolding");
    billiard->require_subcommand(1);
    std::string angles_text;
    bool relax = false;
    auto* classify_cmd = billiard->add_subcommand("classify", "Unfold and classify a rational polygon");
    classify_cmd->add_option("--angles", angles_text, "Angles as multiples of pi, e.g. \"11/14,1/7,1/14\"")
        ->required();
    classify_cmd->add_flag("--relax", relax, "Accept abstract angle systems (skip the polygon-sum check)");
    classify_cmd->add_flag("--json", as_json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "List valid patterns with facts and spin parity");
    std::string flavor = "Q";
    EnumerationOptions opt;
    enumerate->add_option("--flavor", flavor, "Pattern flavor (Q)")->required();
    enumerate->add_option("--max-sum", opt.max_sum, "Upper bound on the order sum")->required();
    enumerate->add_option("--max-poles", opt.max_poles, "Cap on the number of poles (default 4)");
    enumerate->add_option("--max-marked", opt.max_marked, "Cap on the number of marked points (default 0)");
    enumerate->add_flag("--json", as_json, "JSON output");

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the full cross-route verification corpus");
    selftest_cmd->add_flag("--json", as_json, "JSON output");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("strata");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*info) return detail::cmd_stratum_info(pattern_text, as_json, out);
        if (*cover) return detail::cmd_cover(cover_text, keep_marked, as_json, out);
        if (*spin) return detail::cmd_spin(spin_text, as_json, out, err);
        if (*chain) return detail::cmd_arf_chain(chain_text, as_json, out);
        if (*count) return detail::cmd_arf_count(genus_arg, genus_bound, as_json, out);
        if (*classify_cmd) return detail::cmd_billiard(angles_text, relax, as_json, out, err);
        if (*enumerate) return detail::cmd_enumerate(flavor, opt, as_json, out);
        if (*selftest_cmd) return detail::cmd_selftest(as_json, out);
        err << "error: usage: missing subcommand (try --help)\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace strata::cli
