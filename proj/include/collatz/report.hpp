#ifndef COLLATZ_REPORT_HPP
#define COLLATZ_REPORT_HPP

// Text renderings (markdown, CSV, JSON) of node runs, cycle searches and the
// window checks. Real values are printed half-up at fixed decimal counts;
// JSON keeps them as strings so they re-parse exactly.

#include <string>
#include <vector>

#include <json.hpp>

#include "collatz/cycles.hpp"
#include "collatz/nodes.hpp"
#include "collatz/verify.hpp"

namespace collatz {

enum class OutputFormat { md, csv, json };
OutputFormat parse_output_format(const std::string& text);

/// Column layouts: plain keeps full detail, the others follow the reference
/// layouts (ln columns at their usual decimals, deltas at 28).
enum class NodeLayout { plain, table2, table3, table5 };
std::string to_string(NodeLayout layout);
NodeLayout parse_node_layout(const std::string& text);

std::string render_nodes(const std::vector<NodeRecord>& records, NodeLayout layout, OutputFormat format);
nlohmann::json nodes_to_json(const std::vector<NodeRecord>& records, NodeLayout layout);

struct ParsedNodes {
    NodeLayout layout = NodeLayout::plain;
    std::vector<NodeRecord> records;
};
/// Inverse of nodes_to_json (values carry the printed precision only).
ParsedNodes nodes_from_json(const nlohmann::json& doc);

std::string render_cycles(const MappingSpec& spec, const IntRange& range, const CycleSearchResult& result,
                          OutputFormat format);
nlohmann::json cycles_to_json(const MappingSpec& spec, const IntRange& range, const CycleSearchResult& result);
/// Reads back members, branch counts, side and certificate fields.
CycleSearchResult cycles_from_json(const nlohmann::json& doc);

std::string render_periodicity(const PeriodicityReport& rep, OutputFormat format);
std::string render_distribution(const DistributionReport& rep, OutputFormat format);

/// Trajectory / sequence listing; `total` is the class size before head/tail
/// selection, and an ellipsis row marks the gap in markdown.
std::string render_class(const std::vector<ClassMember>& rows, std::size_t total, std::size_t head,
                         OutputFormat format);

struct GapReport {
    int main_index = 0;
    int secondary_index = 0;
    Real ln_C;
    Real ln_R;
    GapAnalysis gap;
};
std::string render_gap(const GapReport& rep, OutputFormat format);

/// "(a,b,c)" rendering used by the class listing.
std::string tuple_string(const std::vector<std::string>& items);

} // namespace collatz

#endif // COLLATZ_REPORT_HPP
