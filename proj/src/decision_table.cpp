#include <roughset/decision_table.hpp>

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

namespace roughset {

namespace {

std::string normalize_token(std::string_view raw) {
    std::size_t b = 0, e = raw.size();
    while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
    std::string out;
    out.reserve(e - b);
    bool pending_space = false;
    for (std::size_t i = b; i < e; ++i) {
        const auto ch = static_cast<unsigned char>(raw[i]);
        // "extremely_low", "extremely low" and "extremely  low" all collapse to one form.
        if (std::isspace(ch) || ch == '_') {
            pending_space = true;
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(static_cast<char>(std::tolower(ch)));
    }
    return out;
}

bool is_index_column(std::string_view name) { return normalize_token(name) == "s no."; }

}  // namespace

Level canonicalize_level(std::string_view raw) {
    const std::string token = normalize_token(raw);
    if (token == "high") return Level::high;
    if (token == "moderate" || token == "medium") return Level::moderate;
    if (token == "low") return Level::low;
    if (token == "extremely low" || token == "very low") return Level::extremely_low;
    throw DataError(DataErrorKind::unknown_level_token, "'" + std::string(raw) + "'");
}

Decision canonicalize_decision(std::string_view raw) {
    const std::string token = normalize_token(raw);
    if (token == "consistent") return Decision::consistent;
    if (token == "inconsistent") return Decision::inconsistent;
    throw DataError(DataErrorKind::unknown_decision_token, "'" + std::string(raw) + "'");
}

std::string_view to_string(Level level) noexcept {
    switch (level) {
    case Level::high: return "high";
    case Level::moderate: return "moderate";
    case Level::low: return "low";
    case Level::extremely_low: return "extremely_low";
    }
    return "?";
}

std::string_view to_string(Decision decision) noexcept {
    return decision == Decision::consistent ? "consistent" : "inconsistent";
}

DecisionTable::DecisionTable(std::vector<std::string> condition_attrs, std::string decision_attr,
                             std::vector<std::vector<Level>> rows, std::vector<Decision> decisions)
    : condition_attrs_(std::move(condition_attrs)), decision_attr_(std::move(decision_attr)),
      decisions_(std::move(decisions)) {
    std::set<std::string_view> seen;
    for (const auto& name : condition_attrs_)
        if (!seen.insert(name).second)
            throw DataError(DataErrorKind::duplicate_attribute, "'" + name + "'");
    if (seen.contains(decision_attr_))
        throw DataError(DataErrorKind::duplicate_attribute,
                        "decision attribute '" + decision_attr_ + "' is also a condition");
    if (rows.size() != decisions_.size())
        throw DataError(DataErrorKind::ragged_row, "row count differs from decision count");
    if (rows.empty()) throw DataError(DataErrorKind::empty_body, "table has no rows");
    levels_.reserve(rows.size() * condition_attrs_.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != condition_attrs_.size())
            throw DataError(DataErrorKind::ragged_row,
                            "row " + std::to_string(i + 1) + " has " +
                                std::to_string(rows[i].size() + 1) + " values, expected " +
                                std::to_string(condition_attrs_.size() + 1));
        levels_.insert(levels_.end(), rows[i].begin(), rows[i].end());
    }
}

const std::string& DecisionTable::column_name(std::size_t column) const {
    return column == decision_column() ? decision_attr_ : condition_attrs_.at(column);
}

std::optional<std::size_t> DecisionTable::find_column(std::string_view name) const {
    const auto lookup = [this](std::string_view n) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < condition_attrs_.size(); ++i)
            if (condition_attrs_[i] == n) return i;
        if (decision_attr_ == n) return decision_column();
        return std::nullopt;
    };
    if (auto direct = lookup(name)) return direct;
    if (auto it = aliases_.find(std::string(name)); it != aliases_.end()) return lookup(it->second);
    return std::nullopt;
}

std::size_t DecisionTable::column(std::string_view name) const {
    if (auto c = find_column(name)) return *c;
    throw DataError(DataErrorKind::unknown_attribute, "'" + std::string(name) + "'");
}

std::vector<std::size_t> DecisionTable::condition_columns(
    const std::vector<std::string>& names) const {
    std::vector<std::size_t> out;
    for (const auto& n : names) {
        const std::size_t c = column(n);
        if (c == decision_column())
            throw DataError(DataErrorKind::unknown_attribute,
                            "'" + n + "' is the decision attribute, not a condition");
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DecisionTable DecisionTable::with_aliases(std::map<std::string, std::string> aliases) const {
    DecisionTable copy = *this;
    copy.aliases_ = std::move(aliases);
    return copy;
}

std::vector<RowIndex> DecisionTable::rows_with(Decision d) const {
    std::vector<RowIndex> out;
    for (RowIndex i = 0; i < size(); ++i)
        if (decisions_[i] == d) out.push_back(i);
    return out;
}

std::vector<std::vector<std::string>> read_csv(std::istream& source) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string field;
    bool in_quotes = false;
    bool line_has_content = false;

    const auto end_field = [&] {
        record.push_back(std::move(field));
        field.clear();
    };
    const auto end_record = [&] {
        if (line_has_content) {
            end_field();
            records.push_back(std::move(record));
        }
        record.clear();
        field.clear();
        line_has_content = false;
    };

    char ch;
    while (source.get(ch)) {
        if (in_quotes) {
            if (ch == '"') {
                if (source.peek() == '"') {
                    source.get(ch);
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
            continue;
        }
        switch (ch) {
        case '"':
            in_quotes = true;
            line_has_content = true;
            break;
        case ',':
            end_field();
            line_has_content = true;
            break;
        case '\r':
            break;
        case '\n':
            end_record();
            break;
        default:
            field.push_back(ch);
            if (!std::isspace(static_cast<unsigned char>(ch))) line_has_content = true;
        }
    }
    if (in_quotes) throw DataError(DataErrorKind::malformed_file, "unterminated quoted field");
    end_record();
    return records;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

DecisionTable parse_table(std::istream& source, const std::optional<std::string>& decision_attr) {
    auto records = read_csv(source);
    if (records.empty()) throw DataError(DataErrorKind::missing_header, "input has no header row");

    std::vector<std::string> header = records.front();
    for (auto& h : header) {
        const auto b = h.find_first_not_of(" \t");
        const auto e = h.find_last_not_of(" \t");
        h = b == std::string::npos ? std::string() : h.substr(b, e - b + 1);
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < header.size(); ++i)
        if (!is_index_column(header[i])) kept.push_back(i);
    if (kept.empty()) throw DataError(DataErrorKind::missing_header, "header has no attributes");

    std::size_t decision_pos = kept.back();
    if (decision_attr) {
        auto it = std::find_if(kept.begin(), kept.end(),
                               [&](std::size_t i) { return header[i] == *decision_attr; });
        if (it == kept.end())
            throw DataError(DataErrorKind::decision_attr_not_found, "'" + *decision_attr + "'");
        decision_pos = *it;
    }

    std::vector<std::string> condition_names;
    std::vector<std::size_t> condition_pos;
    for (std::size_t i : kept) {
        if (i == decision_pos) continue;
        if (header[i].empty())
            throw DataError(DataErrorKind::missing_header,
                            "column " + std::to_string(i + 1) + " has an empty name");
        condition_names.push_back(header[i]);
        condition_pos.push_back(i);
    }

    if (records.size() == 1) throw DataError(DataErrorKind::empty_body, "header without data rows");

    std::vector<std::vector<Level>> rows;
    std::vector<Decision> decisions;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.size() != header.size())
            throw DataError(DataErrorKind::ragged_row,
                            "data row " + std::to_string(r) + " has " + std::to_string(rec.size()) +
                                " fields, header has " + std::to_string(header.size()));
        std::vector<Level> levels;
        levels.reserve(condition_pos.size());
        for (std::size_t i : condition_pos) {
            try {
                levels.push_back(canonicalize_level(rec[i]));
            } catch (const DataError&) {
                throw DataError(DataErrorKind::unknown_level_token,
                                "'" + rec[i] + "' in data row " + std::to_string(r) +
                                    ", column '" + header[i] + "'");
            }
        }
        rows.push_back(std::move(levels));
        decisions.push_back(canonicalize_decision(rec[decision_pos]));
    }
    return DecisionTable(std::move(condition_names), header[decision_pos], std::move(rows),
                         std::move(decisions));
}

DecisionTable parse_table(std::string_view text, const std::optional<std::string>& decision_attr) {
    std::istringstream in{std::string(text)};
    return parse_table(in, decision_attr);
}

std::string serialize_table(const DecisionTable& table) {
    std::string out;
    for (const auto& name : table.condition_attrs()) {
        out += csv_escape(name);
        out += ',';
    }
    out += csv_escape(table.decision_attr());
    out += '\n';
    for (RowIndex r = 0; r < table.size(); ++r) {
        for (Level l : table.conditions(r)) {
            out += to_string(l);
            out += ',';
        }
        out += to_string(table.decision(r));
        out += '\n';
    }
    return out;
}

ValidationReport validate(const DecisionTable& table) {
    ValidationReport report;
    for (RowIndex i = 0; i < table.size(); ++i) {
        for (RowIndex j = i + 1; j < table.size(); ++j) {
            const auto a = table.conditions(i);
            const auto b = table.conditions(j);
            if (!std::equal(a.begin(), a.end(), b.begin())) continue;
            if (table.decision(i) == table.decision(j))
                report.duplicate_pairs.emplace_back(i, j);
            else
                report.conflicting_pairs.emplace_back(i, j);
        }
    }
    return report;
}

}  // namespace roughset
