#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "nilclean/classifier.hpp"
#include "nilclean/ring.hpp"

namespace nilclean {

/// Version of the survey corpus rule implemented by survey_set().
inline constexpr int kSurveyVersion = 1;

struct CatalogEntry {
    std::string name;
    RingTable ring;
    std::string provenance;
    /// Known outcomes keyed by "S2NC", "ZNC", "CUBES-IDEMPOTENT" or a
    /// characterization id name.
    std::map<std::string, bool> expected;
};

class UnknownName : public RingError {
public:
    UnknownName(std::string_view name, const std::vector<std::string>& known);
};

class Catalog {
public:
    /// Named rings constructed in code.
    static Catalog builtin();

    /// Reads manifest.json and the ring files it lists.
    static Catalog load(const std::filesystem::path& dir);

    /// NILCLEAN_CATALOG_DIR when set, else the installed catalog directory
    /// when present, else builtin().
    static const Catalog& standard();

    const CatalogEntry& get(std::string_view name) const;
    std::vector<std::string> names() const;
    const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
    int survey_version() const noexcept { return survey_version_; }

    /// Writes manifest.json plus one ring file per entry.
    void save(const std::filesystem::path& dir) const;

private:
    std::vector<CatalogEntry> entries_;
    int survey_version_ = kSurveyVersion;
};

/// Catalog::standard().get(name).
const CatalogEntry& get_ring(std::string_view name);

/// The 4-element ring given by its verbatim addition and multiplication
/// tables over {a, b, c, d}, indexed 0..3.
RingTable cayley_table_ring();

/// {[[x, y], [y, x + y]] : x, y in Z/3}, element (x, y) at index 3x + y.
RingTable matrix_field_of_order_9();

/// Deterministic test corpus: Z/n (2 <= n <= max_order), GF(4), GF(8), GF(9),
/// GF(25), Z/a x Z/b (2 <= a <= b, ab <= max_order), M2(Z/2), M2(Z/3), each only
/// when its order is at most max_order, followed by the catalog rings.
std::vector<CatalogEntry> survey_set(std::size_t max_order, const BuildOptions& opts = {});

/// Names of expected outcomes that disagree with the report.
std::vector<std::string> expectation_mismatches(const CatalogEntry& entry,
                                                const CharacterizationReport& report);

struct SurveyRow {
    std::string name;
    CharacterizationReport report;
    std::vector<std::string> mismatches;

    bool ok() const { return report.consistent() && mismatches.empty(); }
};

/// cross_check over every entry, spread over `threads` workers (0 = hardware
/// concurrency). Rows come back in input order.
std::vector<SurveyRow> run_survey(const std::vector<CatalogEntry>& entries, unsigned threads = 0);

}  // namespace nilclean
