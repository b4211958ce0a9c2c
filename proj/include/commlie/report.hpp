#ifndef COMMLIE_REPORT_HPP
#define COMMLIE_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

namespace commlie {

enum class Provenance { Paper, Trivial, Derived };

std::string provenance_name(Provenance p);

/// One verified quantity: pass iff there is no reference value or the
/// computed one equals it.
struct VerificationRecord {
    std::string check_id;
    std::optional<long long> paper_value;
    long long computed;
    Provenance provenance;
    bool pass;

    VerificationRecord(std::string id, std::optional<long long> expected, long long computed_,
                       Provenance prov)
        : check_id(std::move(id)),
          paper_value(expected),
          computed(computed_),
          provenance(prov),
          pass(!expected.has_value() || *expected == computed_) {}
};

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name);
std::string render_records(const std::vector<VerificationRecord>& records, Format f);

} // namespace commlie

#endif
