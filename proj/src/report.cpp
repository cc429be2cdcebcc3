#include "collatz/report.hpp"

#include <algorithm>
#include <sstream>

namespace collatz {

using nlohmann::json;

OutputFormat parse_output_format(const std::string& text)
{
    if (text == "md" || text == "markdown") {
        return OutputFormat::md;
    }
    if (text == "csv") {
        return OutputFormat::csv;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("unknown format '" + text + "' (expected csv, json or md)");
}

std::string to_string(NodeLayout layout)
{
    switch (layout) {
    case NodeLayout::plain:
        return "plain";
    case NodeLayout::table2:
        return "table2";
    case NodeLayout::table3:
        return "table3";
    case NodeLayout::table5:
        return "table5";
    }
    return "plain";
}

NodeLayout parse_node_layout(const std::string& text)
{
    for (auto l : {NodeLayout::plain, NodeLayout::table2, NodeLayout::table3, NodeLayout::table5}) {
        if (to_string(l) == text) {
            return l;
        }
    }
    throw ConfigError("unknown node layout '" + text + "'");
}

namespace {

struct Decimals {
    bool md_lambda; // markdown shows lambda = 1 -/+ delta instead of delta
    int delta;      // < 0: scientific with -delta significant digits
    int ln_C;
    int ln_R;
    int ln_P;
    int rs;
};

constexpr int kLambdaDecimals = 14;

Decimals decimals_for(NodeLayout layout)
{
    switch (layout) {
    case NodeLayout::table2:
    case NodeLayout::table5:
        return {true, 28, 2, 2, 2, 3};
    case NodeLayout::table3:
        return {false, 28, 4, 3, 1, 9};
    case NodeLayout::plain:
        break;
    }
    return {true, -25, 6, 6, 6, 9};
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out += (i ? "," : "") + csv_field(cells[i]);
    }
    return out + "\n";
}

std::string md_line(const std::vector<std::string>& cells)
{
    std::string out = "|";
    for (const auto& c : cells) {
        out += " " + c + " |";
    }
    return out + "\n";
}

std::string md_rule(const std::vector<std::string>& align)
{
    std::string out = "|";
    for (const auto& a : align) {
        out += a == "r" ? " ---: |" : " --- |";
    }
    return out + "\n";
}

std::string int_cell(std::int64_t v, bool thousands)
{
    const auto s = std::to_string(v);
    return thousands ? group_thousands(s) : s;
}

json big_to_json(const BigInt& v)
{
    if (auto small = to_int64(v)) {
        return *small;
    }
    return v.str();
}

BigInt big_from_json(const json& j)
{
    if (j.is_string()) {
        return BigInt(j.get<std::string>());
    }
    return BigInt(j.get<std::int64_t>());
}

std::string delta_string(const NodeRecord& rec, const Decimals& dec)
{
    if (dec.delta < 0) {
        return format_sci(rec.value.delta, -dec.delta);
    }
    return format_fixed(rec.value.delta, dec.delta);
}

// `wide`: keep about six significant digits of delta visible past 14 decimals
std::string lambda_string(const NodeRecord& rec, bool wide)
{
    ScopedPrecision prec(std::max(rec.digits, kDefaultDigits));
    const Real lambda = rec.value.side == Side::PP ? Real(1 - rec.value.delta) : Real(1 + rec.value.delta);
    int decimals = kLambdaDecimals;
    if (wide && rec.value.delta > 0) {
        const auto lead = static_cast<int>(floor(log10(rec.value.delta)).convert_to<long>());
        decimals = std::max(decimals, 5 - lead);
    }
    return format_fixed(lambda, decimals);
}

struct NodeCells {
    std::string value;
    std::string ln_C, ln_R, ln_P, rs;
};

NodeCells node_cells(const NodeRecord& rec, const Decimals& dec, bool thousands)
{
    NodeCells c;
    c.value = delta_string(rec, dec);
    if (rec.metrics) {
        c.ln_C = format_fixed(rec.metrics->ln_C, dec.ln_C, thousands);
        c.ln_R = format_fixed(rec.metrics->ln_R, dec.ln_R, thousands);
        c.ln_P = format_fixed(rec.metrics->ln_P, dec.ln_P, thousands);
        c.rs = format_fixed(rec.metrics->rs, dec.rs, thousands);
    }
    return c;
}

} // namespace

json nodes_to_json(const std::vector<NodeRecord>& records, NodeLayout layout)
{
    const auto dec = decimals_for(layout);
    json rows = json::array();
    for (const auto& rec : records) {
        const auto c = node_cells(rec, dec, false);
        json row;
        row["main"] = rec.main_index;
        row["secondary"] = rec.secondary_index;
        row["side"] = to_string(rec.value.side);
        row["delta"] = c.value;
        row["k1"] = rec.value.exponents.k1;
        row["k2"] = rec.value.exponents.k2;
        row["k"] = rec.value.exponents.k();
        auto opt = [&](const std::string& s) { return rec.metrics ? json(s) : json(nullptr); };
        row["lnC"] = opt(c.ln_C);
        row["lnR"] = opt(c.ln_R);
        row["lnP"] = opt(c.ln_P);
        row["rs"] = opt(c.rs);
        row["digits"] = rec.digits;
        rows.push_back(std::move(row));
    }
    return json{{"layout", to_string(layout)}, {"nodes", std::move(rows)}};
}

ParsedNodes nodes_from_json(const json& doc)
{
    ParsedNodes out;
    try {
        out.layout = parse_node_layout(doc.at("layout").get<std::string>());
        for (const auto& row : doc.at("nodes")) {
            NodeRecord rec;
            rec.digits = row.at("digits").get<unsigned>();
            ScopedPrecision prec(std::max(rec.digits, kDefaultDigits));
            rec.main_index = row.at("main").get<int>();
            rec.secondary_index = row.at("secondary").get<int>();
            rec.value.side = row.at("side").get<std::string>() == "PP" ? Side::PP : Side::PG;
            rec.value.exponents = {row.at("k1").get<std::int64_t>(), row.at("k2").get<std::int64_t>()};
            rec.value.delta = Real(row.at("delta").get<std::string>());
            rec.value.ln_lambda =
                rec.value.side == Side::PP ? log1p(Real(-rec.value.delta)) : log1p(rec.value.delta);
            if (!row.at("lnC").is_null()) {
                rec.metrics = NodeMetrics{Real(row.at("lnC").get<std::string>()), Real(row.at("lnR").get<std::string>()),
                                          Real(row.at("lnP").get<std::string>()), Real(row.at("rs").get<std::string>())};
            }
            out.records.push_back(std::move(rec));
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed node JSON: ") + e.what());
    }
    return out;
}

std::string render_nodes(const std::vector<NodeRecord>& records, NodeLayout layout, OutputFormat format)
{
    if (format == OutputFormat::json) {
        return nodes_to_json(records, layout).dump(2) + "\n";
    }
    const auto dec = decimals_for(layout);
    std::string out;
    if (format == OutputFormat::csv) {
        out += csv_line({"main", "secondary", "side", "delta", "k1", "k2", "k", "lnC", "lnR",
                         "lnP", "rs"});
        for (const auto& rec : records) {
            const auto c = node_cells(rec, dec, false);
            const auto& e = rec.value.exponents;
            out += csv_line({std::to_string(rec.main_index), std::to_string(rec.secondary_index),
                             to_string(rec.value.side), c.value, std::to_string(e.k1), std::to_string(e.k2),
                             std::to_string(e.k()), c.ln_C, c.ln_R, c.ln_P, c.rs});
        }
        return out;
    }
    const std::string pp = dec.md_lambda ? "PP" : "ΔPP";
    const std::string pg = dec.md_lambda ? "PG" : "ΔPG";
    out += md_line({"main", "secondary", pp, pg, "k1", "k2", "k", "ln(C)", "ln(R)", "ln(P)", "r or s"});
    out += md_rule({"r", "r", "l", "l", "r", "r", "r", "r", "r", "r", "r"});
    for (const auto& rec : records) {
        auto c = node_cells(rec, dec, true);
        if (dec.md_lambda) {
            c.value = lambda_string(rec, layout == NodeLayout::plain);
        }
        const auto& e = rec.value.exponents;
        const bool is_pp = rec.value.side == Side::PP;
        out += md_line({std::to_string(rec.main_index), std::to_string(rec.secondary_index), is_pp ? c.value : "",
                        is_pp ? "" : c.value, int_cell(e.k1, true), int_cell(e.k2, true), int_cell(e.k(), true),
                        c.ln_C, c.ln_R, c.ln_P, c.rs});
    }
    return out;
}

namespace {

std::string reason_string(StopReason r)
{
    return r == StopReason::step_budget ? "step_budget" : "magnitude_budget";
}

std::string members_string(const std::vector<BigInt>& members, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += (i ? sep : "") + members[i].str();
    }
    return out;
}

struct CertCells {
    std::string m, C, holds;
};

CertCells cert_cells(const CycleRecord& c)
{
    if (!c.certificate) {
        return {"", "", ""};
    }
    const auto& cert = *c.certificate;
    return {cert.m.str(), format_fixed(cert.C, 6), cert.holds ? (cert.vacuous ? "yes (k1 = 0)" : "yes") : "no"};
}

} // namespace

json cycles_to_json(const MappingSpec& spec, const IntRange& range, const CycleSearchResult& result)
{
    json cycles = json::array();
    for (const auto& c : result.cycles) {
        json row;
        json members = json::array();
        for (const auto& m : c.members) {
            members.push_back(big_to_json(m));
        }
        row["members"] = std::move(members);
        row["k"] = c.length();
        row["k1"] = c.branch_counts.k1;
        row["k2"] = c.branch_counts.k2;
        row["side"] = to_string(c.lambda_side);
        if (c.certificate) {
            row["m"] = big_to_json(c.certificate->m);
            row["C"] = format_fixed(c.certificate->C, 6);
            row["constant"] = to_string(c.certificate->constant);
            row["holds"] = c.certificate->holds;
            row["vacuous"] = c.certificate->vacuous;
        }
        cycles.push_back(std::move(row));
    }
    json undetermined = json::array();
    for (const auto& u : result.undetermined) {
        undetermined.push_back({{"start", u.start}, {"reason", reason_string(u.reason)}});
    }
    return json{{"mapping", spec.name()},
                {"range", {range.lo, range.hi}},
                {"starts_examined", result.starts_examined},
                {"cycles", std::move(cycles)},
                {"undetermined", std::move(undetermined)}};
}

CycleSearchResult cycles_from_json(const json& doc)
{
    CycleSearchResult out;
    try {
        out.starts_examined = doc.at("starts_examined").get<std::uint64_t>();
        for (const auto& row : doc.at("cycles")) {
            CycleRecord c;
            for (const auto& m : row.at("members")) {
                c.members.push_back(big_from_json(m));
            }
            c.branch_counts = {row.at("k1").get<std::int64_t>(), row.at("k2").get<std::int64_t>()};
            c.lambda_side = row.at("side").get<std::string>() == "PP" ? Side::PP : Side::PG;
            if (row.contains("m")) {
                ConditionCertificate cert;
                cert.m = big_from_json(row.at("m"));
                cert.C = Real(row.at("C").get<std::string>());
                cert.constant = parse_rational(row.at("constant").get<std::string>());
                cert.holds = row.at("holds").get<bool>();
                cert.vacuous = row.at("vacuous").get<bool>();
                c.certificate = cert;
            }
            out.cycles.push_back(std::move(c));
        }
        for (const auto& row : doc.at("undetermined")) {
            out.undetermined.push_back({row.at("start").get<std::int64_t>(),
                                        row.at("reason").get<std::string>() == "step_budget"
                                            ? StopReason::step_budget
                                            : StopReason::magnitude_budget});
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed cycle JSON: ") + e.what());
    }
    return out;
}

std::string render_cycles(const MappingSpec& spec, const IntRange& range, const CycleSearchResult& result,
                          OutputFormat format)
{
    if (format == OutputFormat::json) {
        return cycles_to_json(spec, range, result).dump(2) + "\n";
    }
    std::string out;
    if (format == OutputFormat::csv) {
        out += csv_line({"least", "k", "k1", "k2", "members", "m", "C", "holds"});
        for (const auto& c : result.cycles) {
            const auto cert = cert_cells(c);
            out += csv_line({c.least().str(), std::to_string(c.length()), std::to_string(c.branch_counts.k1),
                             std::to_string(c.branch_counts.k2), members_string(c.members, " "), cert.m, cert.C,
                             cert.holds});
        }
        for (const auto& u : result.undetermined) {
            out += csv_line({std::to_string(u.start), "", "", "", "undetermined: " + reason_string(u.reason), "", "",
                             ""});
        }
        return out;
    }
    out += "Cycles of " + spec.name() + " with least term in [" + std::to_string(range.lo) + ", " +
           std::to_string(range.hi) + "]: " + std::to_string(result.cycles.size()) + "\n\n";
    out += md_line({"least", "k", "k1", "k2", "cycle", "\\|m\\|", "C", "\\|m\\| <= C"});
    out += md_rule({"r", "r", "r", "r", "l", "r", "r", "l"});
    for (const auto& c : result.cycles) {
        const auto cert = cert_cells(c);
        out += md_line({c.least().str(), std::to_string(c.length()), std::to_string(c.branch_counts.k1),
                        std::to_string(c.branch_counts.k2), "<" + members_string(c.members, ", ") + ">", cert.m,
                        cert.C, cert.holds});
    }
    if (!result.undetermined.empty()) {
        out += "\nUndetermined starts (" + std::to_string(result.undetermined.size()) + "):";
        const std::size_t shown = std::min<std::size_t>(result.undetermined.size(), 50);
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& u = result.undetermined[i];
            out += std::string(i ? "," : "") + " " + std::to_string(u.start) + " (" + reason_string(u.reason) + ")";
        }
        if (shown < result.undetermined.size()) {
            out += ", ...";
        }
        out += "\n";
    }
    return out;
}

std::string render_periodicity(const PeriodicityReport& rep, OutputFormat format)
{
    const std::vector<std::pair<std::string, std::string>> fields = {
        {"base", std::to_string(rep.base)},
        {"k", std::to_string(rep.k)},
        {"window_start", std::to_string(rep.window_start)},
        {"distinct_count", std::to_string(rep.distinct_count)},
        {"expected", std::to_string(rep.expected)},
        {"periodic_samples_checked", std::to_string(rep.periodic_samples_checked)},
        {"all_distinct", rep.all_distinct ? "true" : "false"},
        {"all_periodic", rep.all_periodic ? "true" : "false"},
    };
    if (format == OutputFormat::json) {
        json j{{"base", rep.base},
               {"k", rep.k},
               {"window_start", rep.window_start},
               {"distinct_count", rep.distinct_count},
               {"expected", rep.expected},
               {"periodic_samples_checked", rep.periodic_samples_checked},
               {"all_distinct", rep.all_distinct},
               {"all_periodic", rep.all_periodic}};
        if (rep.counterexample) {
            j["counterexample"] = {{"n", rep.counterexample->first}, {"q", rep.counterexample->second}};
        }
        return j.dump(2) + "\n";
    }
    std::string out;
    if (format == OutputFormat::csv) {
        std::vector<std::string> head, values;
        for (const auto& [k, v] : fields) {
            head.push_back(k);
            values.push_back(v);
        }
        return csv_line(head) + csv_line(values);
    }
    out += md_line({"field", "value"});
    out += md_rule({"l", "r"});
    for (const auto& [k, v] : fields) {
        out += md_line({k, v});
    }
    if (rep.counterexample) {
        out += "\nPeriodicity fails for n = " + std::to_string(rep.counterexample->first) +
               ", q = " + std::to_string(rep.counterexample->second) + "\n";
    }
    return out;
}

std::string render_distribution(const DistributionReport& rep, OutputFormat format)
{
    if (format == OutputFormat::json) {
        json classes = json::array();
        for (const auto& c : rep.classes) {
            classes.push_back(
                {{"k1", c.k1}, {"k2", c.k2}, {"observed", c.observed}, {"expected", big_to_json(c.expected)}});
        }
        return json{{"base", rep.base},     {"k", rep.k},         {"window_start", rep.window_start},
                    {"total", rep.total},   {"match", rep.match}, {"classes", std::move(classes)}}
                   .dump(2) +
               "\n";
    }
    std::string out;
    if (format == OutputFormat::csv) {
        out += csv_line({"k1", "k2", "observed", "expected"});
        for (const auto& c : rep.classes) {
            out += csv_line({std::to_string(c.k1), std::to_string(c.k2), std::to_string(c.observed), c.expected.str()});
        }
        return out;
    }
    out += "Window of " + std::to_string(rep.total) + " starts from " + std::to_string(rep.window_start) +
           ", k = " + std::to_string(rep.k) + "\n\n";
    out += md_line({"k1", "k2", "observed", "eta"});
    out += md_rule({"r", "r", "r", "r"});
    for (const auto& c : rep.classes) {
        out += md_line({std::to_string(c.k1), std::to_string(c.k2), std::to_string(c.observed), c.expected.str()});
    }
    out += std::string("\nmatch: ") + (rep.match ? "true" : "false") + "\n";
    return out;
}

std::string tuple_string(const std::vector<std::string>& items)
{
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i ? "," : "") + items[i];
    }
    return out + ")";
}

namespace {

std::vector<std::string> shown_values(const ClassMember& row)
{
    // k values: the start and its first k - 1 images.
    std::vector<std::string> out;
    const auto k = row.symbols.size();
    for (std::size_t i = 0; i < k && i < row.trajectory.values.size(); ++i) {
        out.push_back(row.trajectory.values[i].str());
    }
    return out;
}

std::vector<std::string> shown_symbols(const ClassMember& row)
{
    std::vector<std::string> out;
    for (int s : row.symbols.entries()) {
        out.push_back(std::to_string(s));
    }
    return out;
}

} // namespace

std::string render_class(const std::vector<ClassMember>& rows, std::size_t total, std::size_t head,
                         OutputFormat format)
{
    if (format == OutputFormat::json) {
        json list = json::array();
        for (const auto& r : rows) {
            json values = json::array();
            for (const auto& v : shown_values(r)) {
                values.push_back(big_to_json(BigInt(v)));
            }
            list.push_back({{"trajectory", std::move(values)}, {"sequence", r.symbols.entries()}});
        }
        return json{{"count", total}, {"rows", std::move(list)}}.dump(2) + "\n";
    }
    std::string out;
    if (format == OutputFormat::csv) {
        out += csv_line({"trajectory", "sequence"});
        for (const auto& r : rows) {
            out += csv_line({tuple_string(shown_values(r)), tuple_string(shown_symbols(r))});
        }
        return out;
    }
    out += md_line({"Trajectories", "Sequences"});
    out += md_rule({"l", "l"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows.size() < total && i == head) {
            out += md_line({"...", "..."});
        }
        out += md_line({tuple_string(shown_values(rows[i])), tuple_string(shown_symbols(rows[i]))});
    }
    out += "\n" + std::to_string(total) + " rows\n";
    return out;
}

std::string render_gap(const GapReport& rep, OutputFormat format)
{
    const std::string node = std::to_string(rep.main_index) + "." + std::to_string(rep.secondary_index);
    const auto lnC = format_fixed(rep.ln_C, 4);
    const auto lnR = format_fixed(rep.ln_R, 4);
    if (format == OutputFormat::json) {
        return json{{"node", node},          {"lnC", lnC},           {"lnR", lnR},
                    {"n_k1", rep.gap.n_k1}, {"n_k2", rep.gap.n_k2}, {"total", rep.gap.total}}
                   .dump(2) +
               "\n";
    }
    const std::vector<std::string> head = {"node", "lnC", "lnR", "n_k1", "n_k2", "total"};
    if (format == OutputFormat::csv) {
        return csv_line(head) + csv_line({node, lnC, lnR, std::to_string(rep.gap.n_k1), std::to_string(rep.gap.n_k2),
                                          std::to_string(rep.gap.total)});
    }
    return md_line({"node", "ln(C)", "ln(R)", "n_k1", "n_k2", "total"}) + md_rule({"l", "r", "r", "r", "r", "r"}) +
           md_line({node, format_fixed(rep.ln_C, 4, true), format_fixed(rep.ln_R, 4, true),
                    int_cell(rep.gap.n_k1, true), int_cell(rep.gap.n_k2, true), int_cell(rep.gap.total, true)});
}

} // namespace collatz
