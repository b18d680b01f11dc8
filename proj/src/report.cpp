#include "dhecke/report.hpp"

#include <iomanip>
#include <sstream>

namespace dhecke {

RelationFamily& RelationReport::family(const std::string& name) {
    for (auto& f : families)
        if (f.name == name) return f;
    families.push_back(RelationFamily{name, 0, 0, {}});
    return families.back();
}

bool RelationReport::all_passed() const {
    for (const auto& f : families)
        if (!f.passed()) return false;
    return true;
}

int RelationReport::total_instances() const {
    int total = 0;
    for (const auto& f : families) total += f.instances;
    return total;
}

void RelationReport::ensure_passed() const {
    for (const auto& f : families)
        if (!f.passed()) throw RelationFailure(subject + ": relation " + f.name + " failed at " + f.first_failure);
}

void RelationReport::append(const RelationReport& other) {
    for (const auto& f : other.families) families.push_back(f);
}

nlohmann::json RelationReport::to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["passed"] = all_passed();
    j["families"] = nlohmann::json::array();
    for (const auto& f : families) {
        nlohmann::json fj{{"name", f.name}, {"instances", f.instances}, {"failures", f.failures}, {"passed", f.passed()}};
        if (!f.passed()) fj["first_failure"] = f.first_failure;
        j["families"].push_back(std::move(fj));
    }
    return j;
}

std::string RelationReport::to_text() const {
    std::ostringstream os;
    os << subject << '\n';
    for (const auto& f : families) {
        os << "  " << (f.passed() ? "PASS" : "FAIL") << "  " << std::left << std::setw(56) << f.name << std::right
           << std::setw(6) << f.instances << " instances";
        if (!f.passed()) os << "  (" << f.failures << " failed; first: " << f.first_failure << ")";
        os << '\n';
    }
    return os.str();
}

}  // namespace dhecke
