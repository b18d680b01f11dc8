#pragma once

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dhecke {

class RelationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RelationFamily {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
    /// Record one instance; `label` names it in case of failure.
    void check(bool ok, const std::string& label) {
        ++instances;
        if (!ok && failures++ == 0) first_failure = label;
    }
};

struct RelationReport {
    std::string subject;
    std::vector<RelationFamily> families;

    RelationFamily& family(const std::string& name);
    bool all_passed() const;
    int total_instances() const;
    /// Throws RelationFailure naming the first failing instance.
    void ensure_passed() const;
    void append(const RelationReport& other);

    nlohmann::json to_json() const;
    std::string to_text() const;
};

}  // namespace dhecke
