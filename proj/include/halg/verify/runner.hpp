#pragma once

#include <algorithm>

#include "halg/verify/checks.hpp"

namespace halg {

/// Modules over one ring; ring-level checks run once under ring_id.
template <class F>
struct RingGroup {
    std::string ring_id;
    RingPtr<F> ring;
    std::vector<Subject<F>> subjects;
};

template <class F>
std::vector<CheckOutcome> verify_group(Session<F>& session, const RingGroup<F>& group, const std::vector<std::string>& checks,
                                       std::optional<int> bound)
{
    const int N = bound ? *bound : session.default_bound(group.ring);
    EngineNumbers<F> engine;
    CheckContext<F> ctx{session, engine, N};
    std::vector<CheckOutcome> out;
    auto reverify = [&](CheckOutcome& o, const std::function<CheckOutcome(CheckContext<F>&)>& run) {
        if (o.status != Status::fail) return;
        OracleNumbers<F> oracle;
        CheckContext<F> octx{session, oracle, N};
        confirm_failure(o, run(octx), oracle.fallbacks());
    };
    for (const auto& name : checks) {
        if (name == "ci_characterization") {
            auto run = [&](CheckContext<F>& c) { return check_ci_characterization(c, group.ring_id, group.ring); };
            auto o = run(ctx);
            reverify(o, run);
            out.push_back(std::move(o));
            continue;
        }
        for (const auto& subj : group.subjects) {
            auto run = [&](CheckContext<F>& c) { return run_module_check(c, name, subj); };
            auto o = run(ctx);
            reverify(o, run);
            out.push_back(std::move(o));
        }
    }
    return out;
}

template <class F>
std::vector<CheckOutcome> explore_group(Session<F>& session, const RingGroup<F>& group, std::optional<int> bound)
{
    const int N = bound ? *bound : session.default_bound(group.ring);
    EngineNumbers<F> engine;
    CheckContext<F> ctx{session, engine, N};
    std::vector<CheckOutcome> out;
    for (const auto& subj : group.subjects)
        for (auto& o : explore_questions(ctx, subj)) out.push_back(std::move(o));
    return out;
}

inline void sort_outcomes(std::vector<CheckOutcome>& v)
{
    std::stable_sort(v.begin(), v.end(), [](const CheckOutcome& a, const CheckOutcome& b) {
        return std::tie(a.module_id, a.check) < std::tie(b.module_id, b.check);
    });
}

}  // namespace halg
