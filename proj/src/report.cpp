#include "commlie/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace commlie {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "PAPER";
        case Provenance::Trivial: return "TRIVIAL";
        case Provenance::Derived: return "DERIVED";
    }
    return "?";
}

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_records(const std::vector<VerificationRecord>& records, Format f) {
    std::ostringstream out;
    switch (f) {
        case Format::Text:
            for (const auto& r : records) {
                out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check_id
                    << "  computed=" << r.computed;
                if (r.paper_value) out << " expected=" << *r.paper_value;
                out << " (" << provenance_name(r.provenance) << ")\n";
            }
            break;
        case Format::Json: {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : records) {
                nlohmann::ordered_json o;
                o["check_id"] = r.check_id;
                if (r.paper_value) o["paper_value"] = *r.paper_value;
                else o["paper_value"] = nullptr;
                o["computed"] = r.computed;
                o["provenance"] = provenance_name(r.provenance);
                o["pass"] = r.pass;
                arr.push_back(std::move(o));
            }
            out << arr.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << "check_id,paper_value,computed,provenance,pass\n";
            for (const auto& r : records) {
                out << r.check_id << ",";
                if (r.paper_value) out << *r.paper_value;
                out << "," << r.computed << "," << provenance_name(r.provenance) << ","
                    << (r.pass ? 1 : 0) << "\n";
            }
            break;
    }
    return out.str();
}

} // namespace commlie
