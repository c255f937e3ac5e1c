#ifndef LEIBNIZ_REPORT_HPP
#define LEIBNIZ_REPORT_HPP

#include <string>

namespace leibniz {

enum class Status { Pass, Fail, Exploratory };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Exploratory: return "EXPLORATORY";
    }
    return "?";
}

/// Outcome of one named check. Pass iff computed == expected.
struct VerificationReport {
    std::string claim;
    std::string computed;
    std::string expected;
    Status status = Status::Fail;

    static VerificationReport compare(std::string claim, std::string computed, std::string expected)
    {
        Status s = computed == expected ? Status::Pass : Status::Fail;
        return {std::move(claim), std::move(computed), std::move(expected), s};
    }

    bool passed() const { return status == Status::Pass; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

} // namespace leibniz

#endif
