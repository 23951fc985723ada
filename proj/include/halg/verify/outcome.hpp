#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace halg {

enum class Status { pass, fail, skip, unknown };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
    case Status::unknown: return "UNKNOWN";
    }
    return "?";
}

/// Stand-in for dim = -∞ inside witness triples.
inline constexpr std::int64_t kWitnessMinusInfinity = INT64_MIN;

struct Witness {
    std::string label;
    long index = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
};

struct CheckOutcome {
    std::string module_id;
    std::string check;
    Status status = Status::skip;
    std::string reason;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;
    long window_lo = 0;
    long window_hi = -1;
    std::string verdict;  // explorer only
};

enum class Rel { eq, le, ge };

/// Accumulates sub-checks of one check into a single outcome.
class Recorder {
public:
    Recorder(std::string module_id, std::string check)
    {
        out_.module_id = std::move(module_id);
        out_.check = std::move(check);
    }

    void window(long lo, long hi)
    {
        if (lo > hi) return;
        if (out_.window_lo > out_.window_hi) {
            out_.window_lo = lo;
            out_.window_hi = hi;
        } else {
            out_.window_lo = std::min(out_.window_lo, lo);
            out_.window_hi = std::max(out_.window_hi, hi);
        }
    }

    bool compare(const std::string& label, long index, std::int64_t lhs, Rel rel, std::int64_t rhs)
    {
        ++evaluated_;
        const bool ok = rel == Rel::eq ? lhs == rhs : rel == Rel::le ? lhs <= rhs : lhs >= rhs;
        if (!ok) {
            failed_ = true;
            out_.witnesses.push_back({label, index, lhs, rhs});
        }
        return ok;
    }

    /// A boolean claim; the witness records the two sides as 0/1.
    bool require(const std::string& label, bool ok, long index = 0, std::int64_t lhs = 1, std::int64_t rhs = 1)
    {
        ++evaluated_;
        if (!ok) {
            failed_ = true;
            out_.witnesses.push_back({label, index, lhs, rhs});
        }
        return ok;
    }

    void skip(const std::string& label, const std::string& why) { skipped_.push_back(label + ": " + why); }
    void unknown(const std::string& label, const std::string& why) { unknown_.push_back(label + ": " + why); }
    void note(std::string text) { out_.notes.push_back(std::move(text)); }

    CheckOutcome finish()
    {
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
            return s;
        };
        if (failed_) {
            out_.status = Status::fail;
        } else if (evaluated_ > 0) {
            out_.status = Status::pass;
        } else if (!unknown_.empty()) {
            out_.status = Status::unknown;
            out_.reason = join(unknown_);
        } else {
            out_.status = Status::skip;
            out_.reason = skipped_.empty() ? "no applicable statement" : join(skipped_);
        }
        if (out_.status == Status::pass || out_.status == Status::fail) {
            for (const auto& s : skipped_) out_.notes.push_back("skipped " + s);
            for (const auto& s : unknown_) out_.notes.push_back("unknown " + s);
        } else if (out_.status == Status::unknown) {
            for (const auto& s : skipped_) out_.notes.push_back("skipped " + s);
        }
        return out_;
    }

private:
    CheckOutcome out_;
    int evaluated_ = 0;
    bool failed_ = false;
    std::vector<std::string> skipped_;
    std::vector<std::string> unknown_;
};

}  // namespace halg
