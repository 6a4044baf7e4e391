#include <roughset/cli.hpp>

#include <roughset/autopilot.hpp>
#include <roughset/decision_table.hpp>
#include <roughset/evaluation.hpp>
#include <roughset/id3.hpp>
#include <roughset/report.hpp>
#include <roughset/rough_set.hpp>
#include <roughset/rules.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#ifndef ROUGHSET_DATA_DIR
#define ROUGHSET_DATA_DIR "."
#endif

namespace roughset::cli {

namespace fs = std::filesystem;
using report::Json;

fs::path data_dir() {
    if (const char* env = std::getenv("ROUGHSET_FIXTURES"); env && *env) return fs::path(env);
    return fs::path(ROUGHSET_DATA_DIR);
}

fs::path resolve_input(const fs::path& path) {
    if (fs::exists(path) || path.is_absolute()) return path;
    if (const fs::path candidate = data_dir() / path; fs::exists(candidate)) return candidate;
    return path;
}

namespace {

enum class Format { json, text };

std::string read_file(const std::string& path) {
    const fs::path resolved = resolve_input(path);
    std::ifstream in(resolved, std::ios::binary);
    if (!in) throw DataError(DataErrorKind::malformed_file, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

DecisionTable load_table(const std::string& path, const std::string& decision) {
    if (path.empty()) return autopilot::training_fixture();
    const std::string text = read_file(path);
    std::optional<std::string> decision_attr;
    if (!decision.empty()) decision_attr = decision;
    try {
        return autopilot::with_case_study_aliases(parse_table(text, decision_attr));
    } catch (const DataError& e) {
        throw DataError(e.kind(), e.detail() + " in '" + path + "'");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? std::string() : item.substr(b, e - b + 1));
    }
    return out;
}

Object parse_object(const std::string& text) {
    Object obj;
    for (const auto& pair : split_list(text)) {
        const auto eq = pair.find('=');
        if (eq == std::string::npos)
            throw DataError(DataErrorKind::invalid_argument, "object entry '" + pair + "' is not attr=level");
        obj[pair.substr(0, eq)] = canonicalize_level(pair.substr(eq + 1));
    }
    return obj;
}

autopilot::LevelQuintuple parse_levels(const std::string& text) {
    const auto parts = split_list(text);
    if (parts.size() != 5)
        throw DataError(DataErrorKind::invalid_argument,
                        "--levels needs 5 comma-separated levels, got " + std::to_string(parts.size()));
    autopilot::LevelQuintuple levels{};
    for (std::size_t i = 0; i < 5; ++i) levels[i] = canonicalize_level(parts[i]);
    return levels;
}

autopilot::Payload parse_payload(const std::string& text) {
    for (autopilot::Payload p : autopilot::kAllPayloads)
        if (text == autopilot::payload_numeral(p) || text == autopilot::payload_name(p) ||
            text == std::to_string(static_cast<int>(p) + 1))
            return p;
    throw DataError(DataErrorKind::invalid_argument, "unknown payload '" + text + "' (use I..V)");
}

std::string join(const std::vector<std::string>& items, std::string_view sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string rows_text(const RowSet& rows) {
    std::vector<std::string> items;
    for (RowIndex r : rows) items.push_back(std::to_string(r + 1));
    return "{" + join(items) + "}";
}

std::string rational_text(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()) + " (" + to_decimal(r) + ")";
}

std::string rule_text(const Rule& rule) {
    std::vector<std::string> conds;
    for (const auto& c : rule.antecedent) conds.push_back("(" + c.attr + " = " + std::string(to_string(c.value)) + ")");
    return (conds.empty() ? std::string("(true)") : join(conds, " & ")) + " => " +
           std::string(to_string(rule.consequent));
}

void tree_text(const id3::TreeNode& node, std::ostream& out, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    if (const auto* leaf = std::get_if<id3::Leaf>(&node.node)) {
        out << pad << "-> " << to_string(leaf->decision) << "\n";
        return;
    }
    const auto& split = std::get<id3::Split>(node.node);
    out << pad << "split " << split.attr << " (fallback " << to_string(split.fallback) << ")\n";
    for (const auto& [level, child] : split.branches) {
        out << pad << "  " << split.attr << " = " << to_string(level) << ":\n";
        tree_text(*child, out, depth + 2);
    }
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << "\n"; }

struct Options {
    Format format = Format::json;
    std::string table;
    std::string decision;
    std::string attrs;
    bool attrs_given = false;
    std::string target = "consistent";
    std::string target_rows;
    std::string rules;
    std::string rule_set = "paper";
    std::string object;
    std::string tree;
    std::string train;
    std::string test;
    std::optional<std::uint64_t> synthetic;
    std::size_t n = 50;
    std::uint64_t seed = 42;
    std::string faults;
    std::string fault_file;
    std::string levels;
    std::string payload;
    std::string inputs;
    std::string dir;
    std::string out_file;
};

// Rule set from --rules FILE (annotated against the table when one is
// available) or induced from --table.
RuleSet rules_from(const Options& o) {
    const DecisionTable table = load_table(o.table, o.decision);
    if (o.rules.empty()) return induce_rules(table);
    return annotate(table, parse_rule_file(read_file(o.rules)));
}

int cmd_validate(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const auto rep = validate(table);
    if (o.format == Format::json) {
        Json doc = report::validation(rep);
        doc["rows"] = table.size();
        emit(out, doc);
    } else {
        out << "rows: " << table.size() << "\n";
        out << "consistent: " << (rep.consistent() ? "yes" : "no") << "\n";
        out << "conflicting pairs:";
        for (const auto& [i, j] : rep.conflicting_pairs) out << " (" << i + 1 << "," << j + 1 << ")";
        out << "\nduplicate pairs:";
        for (const auto& [i, j] : rep.duplicate_pairs) out << " (" << i + 1 << "," << j + 1 << ")";
        out << "\n";
    }
    return kSuccess;
}

AttributeSet selected_attrs(const DecisionTable& table, const Options& o, bool allow_decision) {
    if (!o.attrs_given) return all_conditions(table);
    const auto names = split_list(o.attrs);
    return allow_decision ? resolve_attributes(table, names) : table.condition_columns(names);
}

int cmd_partition(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const Partition p = partition(table, selected_attrs(table, o, true));
    if (o.format == Format::json) {
        emit(out, report::partition(table, p));
    } else {
        out << "attributes: " << join(attribute_names(table, p.attrs)) << "\n";
        out << "blocks: " << p.blocks.size() << "\n";
        for (const auto& b : p.blocks) out << "  " << rows_text(b) << "\n";
    }
    return kSuccess;
}

int cmd_approx(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const AttributeSet attrs = selected_attrs(table, o, false);
    RowSet target;
    std::string target_label;
    if (!o.target_rows.empty()) {
        std::vector<RowIndex> idx;
        for (const auto& item : split_list(o.target_rows)) {
            std::size_t pos = 0;
            unsigned long v = 0;
            try {
                v = std::stoul(item, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != item.size() || v == 0)
                throw DataError(DataErrorKind::invalid_argument, "'" + item + "' is not a 1-based row number");
            idx.push_back(v - 1);
        }
        target = rowset::normalize(std::move(idx), table.size());
        target_label = "rows " + o.target_rows;
    } else {
        const Decision d = canonicalize_decision(o.target);
        target = table.rows_with(d);
        target_label = std::string(to_string(d));
    }
    const auto rep = approximate(table, attrs, target);
    const RowSet pos = positive_region(table, attrs);
    const Rational gamma = dependency_degree(table, attrs);
    if (o.format == Format::json) {
        Json doc;
        doc["attributes"] = report::attributes(table, attrs);
        doc["target"] = target_label;
        doc["target_rows"] = report::rows(target);
        doc["approximation"] = report::approximation(rep);
        doc["positive_region"] = report::rows(pos);
        doc["dependency_degree"] = report::rational(gamma);
        emit(out, doc);
    } else {
        out << "attributes: " << join(attribute_names(table, attrs)) << "\n";
        out << "target: " << target_label << " " << rows_text(target) << "\n";
        out << "lower: " << rows_text(rep.lower) << "\n";
        out << "upper: " << rows_text(rep.upper) << "\n";
        out << "boundary: " << rows_text(rep.boundary) << "\n";
        out << "accuracy: " << rational_text(rep.accuracy) << "\n";
        out << "set is " << (rep.is_crisp ? "crisp" : "rough") << "\n";
        out << "positive region: " << rows_text(pos) << "\n";
        out << "dependency degree: " << rational_text(gamma) << "\n";
    }
    return kSuccess;
}

int cmd_reducts(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const ReductReport rep = find_reducts(table);
    std::vector<std::pair<std::string, Rational>> sig;
    for (std::size_t a = 0; a < table.condition_count(); ++a)
        sig.emplace_back(table.condition_attrs()[a], significance(table, a));
    if (o.format == Format::json) {
        Json doc = report::reducts(table, rep);
        Json s = Json::object();
        for (const auto& [name, value] : sig) s[name] = report::rational(value);
        doc["significance"] = std::move(s);
        emit(out, doc);
    } else {
        out << "baseline gamma: " << rational_text(rep.baseline_gamma) << "\n";
        out << "reducts:\n";
        for (const auto& r : rep.reducts) out << "  {" << join(attribute_names(table, r)) << "}\n";
        out << "core: {" << join(attribute_names(table, rep.core)) << "}\n";
        out << "significance:\n";
        for (const auto& [name, value] : sig) out << "  " << name << ": " << rational_text(value) << "\n";
    }
    return kSuccess;
}

int cmd_rules_induce(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const RuleSet rules = induce_rules(table);
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file, std::ios::binary);
        if (!f) throw DataError(DataErrorKind::malformed_file, "cannot write '" + o.out_file + "'");
        f << write_rule_file(rules);
    }
    if (o.format == Format::json) {
        emit(out, report::rule_set(rules));
    } else {
        for (std::size_t i = 0; i < rules.rules.size(); ++i) {
            const Rule& r = rules.rules[i];
            out << "rule " << i + 1 << ". " << rule_text(r) << "  [support " << r.support << ", confidence "
                << (r.confidence ? to_decimal(*r.confidence) : "null") << "]\n";
        }
    }
    return kSuccess;
}

int cmd_rules_audit(const Options& o, std::ostream& out) {
    if (o.rules.empty()) throw DataError(DataErrorKind::invalid_argument, "rules audit needs --rules");
    const DecisionTable table = load_table(o.table, o.decision);
    const RuleSet rules = parse_rule_file(read_file(o.rules));
    const RuleAudit audit = audit_rules(table, rules);
    if (o.format == Format::json) {
        emit(out, report::audit(rules, audit));
    } else {
        for (const auto& e : audit.entries) {
            out << "rule " << e.rule_index + 1 << ". " << rule_text(rules.rules[e.rule_index]) << "\n";
            out << "    support " << e.support << ", hits " << e.hits << ", confidence "
                << (e.confidence ? to_decimal(*e.confidence) : "null") << ", counterexamples "
                << rows_text(e.counterexamples) << "\n";
        }
    }
    return kSuccess;
}

void verdict_text(const Verdict& v, std::ostream& out) {
    std::vector<std::string> matched;
    for (std::size_t i : v.matched_rules) matched.push_back(std::to_string(i + 1));
    out << "decision: " << to_string(v.decision) << "\n";
    out << "matched rules: " << (matched.empty() ? "none" : join(matched)) << "\n";
    out << "override alert: " << (v.override_alert ? "yes" : "no") << "\n";
}

int cmd_rules_classify(const Options& o, std::ostream& out) {
    if (o.object.empty()) throw DataError(DataErrorKind::invalid_argument, "rules classify needs --object");
    const RuleSet rules = rules_from(o);
    const Verdict v = classify(rules, parse_object(o.object));
    if (o.format == Format::json)
        emit(out, report::verdict(v));
    else
        verdict_text(v, out);
    return kSuccess;
}

int cmd_rules_frequency(const Options& o, std::ostream& out) {
    const RuleSet rules = o.rules.empty() ? rules_from(o) : parse_rule_file(read_file(o.rules));
    const auto counts = attribute_frequency(rules);
    if (o.format == Format::json) {
        emit(out, report::frequency(counts));
    } else {
        for (const auto& [name, count] : counts) out << name << ": " << count << "\n";
    }
    return kSuccess;
}

int cmd_id3_train(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const id3::TreeNode tree = id3::build_tree(table);
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file, std::ios::binary);
        if (!f) throw DataError(DataErrorKind::malformed_file, "cannot write '" + o.out_file + "'");
        f << report::tree(tree).dump(2) << "\n";
    }
    if (o.format == Format::json) {
        emit(out, Json{{"depth", tree.depth()}, {"tree", report::tree(tree)}});
    } else {
        out << "depth: " << tree.depth() << "\n";
        tree_text(tree, out, 0);
    }
    return kSuccess;
}

int cmd_id3_classify(const Options& o, std::ostream& out) {
    if (o.object.empty()) throw DataError(DataErrorKind::invalid_argument, "id3 classify needs --object");
    id3::TreeNode tree = [&] {
        if (o.tree.empty()) return id3::build_tree(load_table(o.table, o.decision));
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(read_file(o.tree));
        } catch (const nlohmann::json::parse_error& e) {
            throw DataError(DataErrorKind::malformed_file, std::string("tree file: ") + e.what());
        }
        return report::parse_tree(doc);
    }();
    const Decision d = id3::tree_classify(tree, parse_object(o.object));
    if (o.format == Format::json)
        emit(out, Json{{"decision", to_string(d)}});
    else
        out << "decision: " << to_string(d) << "\n";
    return kSuccess;
}

int cmd_id3_gain(const Options& o, std::ostream& out) {
    const DecisionTable table = load_table(o.table, o.decision);
    const RowSet all = universe(table);
    const double h = id3::decision_entropy(table, all);
    std::vector<std::pair<std::string, double>> gains;
    for (std::size_t a = 0; a < table.condition_count(); ++a)
        gains.emplace_back(table.condition_attrs()[a], id3::information_gain(table, all, a));
    if (o.format == Format::json) {
        Json g = Json::object();
        for (const auto& [name, value] : gains) g[name] = value;
        emit(out, Json{{"entropy", h}, {"information_gain", std::move(g)}});
    } else {
        std::ostringstream line;
        line << std::fixed << std::setprecision(6);
        line << "entropy: " << h << "\n";
        for (const auto& [name, value] : gains) line << "gain " << name << ": " << value << "\n";
        out << line.str();
    }
    return kSuccess;
}

void eval_text(const eval::EvalReport& a, const eval::EvalReport& b, std::ostream& out) {
    out << std::left << std::setw(18) << "Approach" << std::right << std::setw(10) << "Training"
        << std::setw(10) << "Testing" << std::setw(10) << "Matched" << std::setw(16) << "Detection Rate"
        << std::setw(10) << "Unknown" << "\n";
    for (const auto* r : {&a, &b}) {
        out << std::left << std::setw(18) << r->approach << std::right << std::setw(10) << r->training_size
            << std::setw(10) << r->testing_size << std::setw(10) << r->matched << std::setw(16)
            << eval::percent(r->detection_rate) << std::setw(10)
            << (r->unknown_verdicts ? std::to_string(*r->unknown_verdicts) : "-") << "\n";
    }
}

int cmd_evaluate(const Options& o, std::ostream& out) {
    const DecisionTable train = load_table(o.train, o.decision);
    DecisionTable test = train;
    std::string test_label = o.train.empty() ? "training fixture" : o.train;
    if (o.synthetic) {
        test = eval::synth_test_set(train, *o.synthetic, o.n);
        test_label = "synthetic seed " + std::to_string(*o.synthetic) + " n " + std::to_string(o.n);
    } else if (!o.test.empty()) {
        test = load_table(o.test, o.decision);
        test_label = o.test;
    }
    const auto [rules, tree] = eval::compare(train, test);
    if (o.format == Format::json) {
        emit(out, Json{{"test_set", test_label},
                       {"reports", Json::array({report::evaluation(rules), report::evaluation(tree)})}});
    } else {
        out << "test set: " << test_label << "\n";
        eval_text(rules, tree, out);
    }
    return kSuccess;
}

int cmd_synth(const Options& o, std::ostream& out) {
    const DecisionTable train = load_table(o.table, o.decision);
    const DecisionTable t = eval::synth_test_set(train, o.seed, o.n);
    if (o.format == Format::text) {
        out << serialize_table(t);
        return kSuccess;
    }
    Json header = Json::array();
    for (const auto& a : t.condition_attrs()) header.push_back(a);
    header.push_back(t.decision_attr());
    Json rows = Json::array();
    for (RowIndex r = 0; r < t.size(); ++r) {
        Json row = Json::array();
        for (Level l : t.conditions(r)) row.push_back(to_string(l));
        row.push_back(to_string(t.decision(r)));
        rows.push_back(std::move(row));
    }
    emit(out, Json{{"seed", o.seed}, {"header", std::move(header)}, {"rows", std::move(rows)}});
    return kSuccess;
}

int cmd_autopilot(const Options& o, std::ostream& out) {
    const int sources = !o.faults.empty() + !o.fault_file.empty() + !o.levels.empty();
    if (sources != 1)
        throw DataError(DataErrorKind::invalid_argument,
                        "autopilot needs exactly one of --faults, --fault-file, --levels");
    RuleSet rules;
    std::string rules_label;
    if (!o.rules.empty()) {
        rules = annotate(autopilot::training_fixture(), parse_rule_file(read_file(o.rules)));
        rules_label = o.rules;
    } else if (o.rule_set == "induced") {
        rules = autopilot::induced_rules();
        rules_label = "induced";
    } else {
        rules = autopilot::paper_rules();
        rules_label = "paper";
    }
    autopilot::PipelineResult result;
    if (!o.levels.empty()) {
        result = autopilot::classify_levels(parse_levels(o.levels), rules);
    } else {
        const auto faults = o.faults.empty() ? autopilot::parse_fault_file(read_file(o.fault_file))
                                             : autopilot::parse_fault_list(o.faults);
        result = autopilot::full_pipeline(faults, rules);
    }
    if (o.format == Format::json) {
        Json doc = report::pipeline(result);
        doc["rules"] = rules_label;
        emit(out, doc);
    } else {
        for (autopilot::Payload p : autopilot::kAllPayloads)
            out << autopilot::payload_name(p) << ": " << to_string(result.levels[static_cast<std::size_t>(p)])
                << "\n";
        out << "rules: " << rules_label << "\n";
        verdict_text(result.verdict, out);
    }
    return kSuccess;
}

int cmd_payload(const Options& o, std::ostream& out) {
    const autopilot::Payload id = parse_payload(o.payload);
    const std::vector<std::string> parts = split_list(o.inputs);
    std::array<bool, 8> buffer{};
    if (parts.size() > buffer.size())
        throw DataError(DataErrorKind::invalid_argument, "too many payload inputs");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::string t = parts[i];
        std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
        if (t == "yes" || t == "1" || t == "true")
            buffer[i] = true;
        else if (t != "no" && t != "0" && t != "false")
            throw DataError(DataErrorKind::invalid_argument, "'" + parts[i] + "' is not yes/no");
    }
    const Level level = autopilot::payload_level(id, std::span<const bool>(buffer.data(), parts.size()));
    if (o.format == Format::json)
        emit(out, Json{{"payload", autopilot::payload_name(id)}, {"level", to_string(level)}});
    else
        out << autopilot::payload_name(id) << ": " << to_string(level) << "\n";
    return kSuccess;
}

int cmd_fixtures_export(const Options& o, std::ostream& out) {
    if (o.dir.empty()) throw DataError(DataErrorKind::invalid_argument, "fixtures export needs --dir");
    Json written = Json::array();
    for (const auto& [rel, contents] : autopilot::fixture_files()) {
        const fs::path target = fs::path(o.dir) / rel;
        fs::create_directories(target.parent_path());
        std::ofstream f(target, std::ios::binary);
        if (!f) throw DataError(DataErrorKind::malformed_file, "cannot write '" + target.string() + "'");
        f << contents;
        written.push_back(rel);
    }
    if (o.format == Format::json)
        emit(out, Json{{"directory", o.dir}, {"files", std::move(written)}});
    else
        for (const auto& w : written) out << w.get<std::string>() << "\n";
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rough-set decision analysis over categorical decision tables", "roughset"};
    app.require_subcommand(1);
    Options o;
    std::string format = "json";

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    const auto add_table = [&](CLI::App* cmd) {
        cmd->add_option("--table", o.table, "Decision table CSV (default: bundled training table)");
        cmd->add_option("--decision", o.decision, "Decision column name (default: last column)");
        add_format(cmd);
    };

    auto* validate_cmd = app.add_subcommand("validate", "Report conflicting and duplicate rows");
    add_table(validate_cmd);

    auto* partition_cmd = app.add_subcommand("partition", "Indiscernibility classes over attributes");
    add_table(partition_cmd);
    partition_cmd->add_option("--attrs", o.attrs, "Comma-separated attributes (empty for none)");

    auto* approx_cmd = app.add_subcommand("approx", "Lower/upper approximation, positive region, dependency");
    add_table(approx_cmd);
    approx_cmd->add_option("--attrs", o.attrs, "Comma-separated condition attributes (default: all)");
    approx_cmd->add_option("--target", o.target, "Decision class to approximate");
    approx_cmd->add_option("--rows", o.target_rows, "Explicit 1-based target rows instead of a class");

    auto* reducts_cmd = app.add_subcommand("reducts", "All reducts, core and attribute significance");
    add_table(reducts_cmd);

    auto* rules_cmd = app.add_subcommand("rules", "Decision rules");
    rules_cmd->require_subcommand(1);
    auto* induce_cmd = rules_cmd->add_subcommand("induce", "Induce minimal certain rules");
    add_table(induce_cmd);
    induce_cmd->add_option("--out", o.out_file, "Also write the rules as a rule file");
    auto* audit_cmd = rules_cmd->add_subcommand("audit", "Audit a rule file against a table");
    add_table(audit_cmd);
    audit_cmd->add_option("--rules", o.rules, "Rule file (JSON)")->required();
    auto* classify_cmd = rules_cmd->add_subcommand("classify", "Classify one object");
    add_table(classify_cmd);
    classify_cmd->add_option("--rules", o.rules, "Rule file (default: induce from --table)");
    classify_cmd->add_option("--object", o.object, "attr=level pairs, comma-separated")->required();
    auto* frequency_cmd = rules_cmd->add_subcommand("frequency", "Rules mentioning each attribute");
    add_table(frequency_cmd);
    frequency_cmd->add_option("--rules", o.rules, "Rule file (default: induce from --table)");

    auto* id3_cmd = app.add_subcommand("id3", "ID3 decision tree baseline");
    id3_cmd->require_subcommand(1);
    auto* train_cmd = id3_cmd->add_subcommand("train", "Build a tree");
    add_table(train_cmd);
    train_cmd->add_option("--out", o.out_file, "Also write the tree JSON to a file");
    auto* tclassify_cmd = id3_cmd->add_subcommand("classify", "Classify one object");
    add_table(tclassify_cmd);
    tclassify_cmd->add_option("--tree", o.tree, "Tree JSON (default: train on --table)");
    tclassify_cmd->add_option("--object", o.object, "attr=level pairs, comma-separated")->required();
    auto* gain_cmd = id3_cmd->add_subcommand("gain", "Decision entropy and root information gains");
    add_table(gain_cmd);

    auto* evaluate_cmd = app.add_subcommand("evaluate", "Detection rates of induced rules vs ID3");
    evaluate_cmd->add_option("--train", o.train, "Training table (default: bundled training table)");
    evaluate_cmd->add_option("--test", o.test, "Test table (default: the training table)");
    evaluate_cmd->add_option("--synthetic", o.synthetic, "Score on a synthetic test set from this seed");
    evaluate_cmd->add_option("--n", o.n, "Synthetic test set size")->check(CLI::PositiveNumber);
    evaluate_cmd->add_option("--decision", o.decision, "Decision column name");
    add_format(evaluate_cmd);

    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic labelled test set");
    add_table(synth_cmd);
    synth_cmd->add_option("--seed", o.seed, "Generator seed");
    synth_cmd->add_option("--n", o.n, "Row count")->check(CLI::PositiveNumber);

    auto* autopilot_cmd = app.add_subcommand("autopilot", "Fault inputs -> payload levels -> verdict");
    autopilot_cmd->add_option("--faults", o.faults, "17 comma-separated yes/no values");
    autopilot_cmd->add_option("--fault-file", o.fault_file, "name=yes|no file with all 17 faults");
    autopilot_cmd->add_option("--levels", o.levels, "Five payload levels, skipping the lookups");
    autopilot_cmd->add_option("--rules", o.rules, "Rule file (overrides --rule-set)");
    autopilot_cmd->add_option("--rule-set", o.rule_set, "Bundled rules: paper or induced")
        ->check(CLI::IsMember({"paper", "induced"}));
    add_format(autopilot_cmd);

    auto* payload_cmd = app.add_subcommand("payload", "Look up one payload table");
    payload_cmd->add_option("--id", o.payload, "Payload I..V")->required();
    payload_cmd->add_option("--inputs", o.inputs, "Comma-separated yes/no inputs")->required();
    add_format(payload_cmd);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "Bundled data files");
    fixtures_cmd->require_subcommand(1);
    auto* export_cmd = fixtures_cmd->add_subcommand("export", "Write the bundled fixtures to a directory");
    export_cmd->add_option("--dir", o.dir, "Destination directory")->required();
    add_format(export_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    o.format = format == "text" ? Format::text : Format::json;
    o.attrs_given = partition_cmd->count("--attrs") > 0 || approx_cmd->count("--attrs") > 0;

    try {
        if (validate_cmd->parsed()) return cmd_validate(o, out);
        if (partition_cmd->parsed()) return cmd_partition(o, out);
        if (approx_cmd->parsed()) return cmd_approx(o, out);
        if (reducts_cmd->parsed()) return cmd_reducts(o, out);
        if (induce_cmd->parsed()) return cmd_rules_induce(o, out);
        if (audit_cmd->parsed()) return cmd_rules_audit(o, out);
        if (classify_cmd->parsed()) return cmd_rules_classify(o, out);
        if (frequency_cmd->parsed()) return cmd_rules_frequency(o, out);
        if (train_cmd->parsed()) return cmd_id3_train(o, out);
        if (tclassify_cmd->parsed()) return cmd_id3_classify(o, out);
        if (gain_cmd->parsed()) return cmd_id3_gain(o, out);
        if (evaluate_cmd->parsed()) return cmd_evaluate(o, out);
        if (synth_cmd->parsed()) return cmd_synth(o, out);
        if (autopilot_cmd->parsed()) return cmd_autopilot(o, out);
        if (payload_cmd->parsed()) return cmd_payload(o, out);
        if (export_cmd->parsed()) return cmd_fixtures_export(o, out);
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    err << "error: no command\n";
    return kUsageError;
}

}  // namespace roughset::cli
