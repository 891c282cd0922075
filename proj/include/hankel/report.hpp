#ifndef HANKEL_REPORT_HPP
#define HANKEL_REPORT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hankel/analyze.hpp"
#include "hankel/numbers.hpp"
#include "hankel/verify.hpp"

namespace hankel {

using Json = nlohmann::ordered_json;

// Persisted determinant table. Values serialize as decimal strings; H_n
// outgrows 64-bit machine words almost immediately.
struct DeterminantTable {
    std::string tool_version;
    unsigned r = 0;
    std::string method;  // "tau" | "oracle"
    std::size_t precision = 0;
    std::vector<Int> values;  // dense in n from 0
};

Json to_json(const DeterminantTable& t);
DeterminantTable determinant_table_from_json(const Json& j);

Json to_json(const ClosedForm& f);
Json to_json(const TargetReport& rep);

// Per-r report in the stable schema:
// { tool_version, r, values[], period, closed_forms[], verification[] }
struct RunReport {
    unsigned r = 0;
    std::vector<Int> values;
    std::optional<long> period;
    std::vector<ClosedForm> closed_forms;
    std::vector<TargetReport> verification;
};

Json to_json(const RunReport& rep);

std::string render_csv(const DeterminantTable& t);
std::string render_markdown(const DeterminantTable& t);
std::string render_markdown(const RunReport& rep);

// Determinant-table cache, keyed by (r, method, tool version, precision
// policy). A stale key never matches after an algorithm change.
class TableCache {
public:
    explicit TableCache(std::filesystem::path dir);

    std::optional<DeterminantTable> load(unsigned r, const std::string& method,
                                         std::size_t min_orders) const;
    void store(const DeterminantTable& t) const;

    std::filesystem::path path_for(unsigned r, const std::string& method) const;

private:
    std::filesystem::path dir_;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hankel

#endif
