#ifndef RLSHIFT_REPORT_HPP
#define RLSHIFT_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace rlshift {

using Json = nlohmann::ordered_json;

/// Verification report. Two flavours share one type: automorphism checks
/// ({automorphism, algebra, relationsChecked, violations}) and combinatorial or
/// fusion checks ({check, parameters, casesTested, mismatches}).
class Report {
public:
    static constexpr int schema_version = 1;

    /// Witness lists are truncated to this many entries; the full count is kept.
    static constexpr std::size_t max_listed = 200;

    static Report automorphism(std::string statement, std::string automorphism, std::string algebra)
    {
        Report r;
        r.statement_ = std::move(statement);
        r.kind_ = Kind::automorphism;
        r.subject_ = std::move(automorphism);
        r.context_ = std::move(algebra);
        return r;
    }

    static Report check(std::string statement, std::string check, Json parameters)
    {
        Report r;
        r.statement_ = std::move(statement);
        r.kind_ = Kind::check;
        r.subject_ = std::move(check);
        r.context_ = std::move(parameters);
        return r;
    }

    void count(std::size_t n = 1) { checked_ += n; }

    void fail(Json witness)
    {
        ++failures_;
        if (listed_.size() < max_listed) listed_.push_back(std::move(witness));
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }
    void set(const std::string& key, Json value) { extra_[key] = std::move(value); }

    /// Appends another report's counts and witnesses (in order).
    void absorb(const Report& other)
    {
        checked_ += other.checked_;
        for (const auto& w : other.listed_)
            if (listed_.size() < max_listed) listed_.push_back(w);
        failures_ += other.failures_;
    }

    bool passed() const noexcept { return failures_ == 0; }
    std::size_t checked() const noexcept { return checked_; }
    std::size_t failures() const noexcept { return failures_; }
    const std::vector<Json>& witnesses() const noexcept { return listed_; }
    const std::string& statement() const noexcept { return statement_; }

    Json to_json() const
    {
        Json j;
        j["schemaVersion"] = schema_version;
        j["statement"] = statement_;
        const bool aut = kind_ == Kind::automorphism;
        j[aut ? "automorphism" : "check"] = subject_;
        j[aut ? "algebra" : "parameters"] = context_;
        j[aut ? "relationsChecked" : "casesTested"] = checked_;
        j[aut ? "violations" : "mismatches"] = listed_;
        j[aut ? "violationCount" : "mismatchCount"] = failures_;
        for (const auto& [k, v] : extra_.items()) j[k] = v;
        if (!notes_.empty()) j["notes"] = notes_;
        j["passed"] = passed();
        return j;
    }

private:
    enum class Kind { automorphism, check };

    std::string statement_;
    Kind kind_ = Kind::check;
    std::string subject_;
    Json context_;
    std::size_t checked_ = 0;
    std::size_t failures_ = 0;
    std::vector<Json> listed_;
    std::vector<std::string> notes_;
    Json extra_ = Json::object();
};

/// A batch of reports as one document.
inline Json report_bundle(const std::vector<Report>& reports, const Json& run = Json::object())
{
    Json j;
    j["schemaVersion"] = Report::schema_version;
    if (!run.empty()) j["run"] = run;
    Json arr = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        arr.push_back(r.to_json());
        ok = ok && r.passed();
    }
    j["reports"] = arr;
    j["passed"] = ok;
    return j;
}

} // namespace rlshift

#endif
