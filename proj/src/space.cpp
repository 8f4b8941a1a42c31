#include "lorentzlen/space.hpp"

namespace lls {

namespace {

// Reachability closure of an edge predicate, including the diagonal.
template <typename Step>
BitMatrix closure_of(std::size_t n, Step step) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
        for (std::size_t j = 0; j < n; ++j)
            if (step(PointId(i), PointId(j))) m.set(i, j);
    }
    m.transitive_close();
    return m;
}

}  // namespace

const BitMatrix& SpaceDescription::step_closure() const {
    if (!step_closure_)
        step_closure_ = closure_of(size(), [this](PointId u, PointId v) { return step_ok(u, v); });
    return *step_closure_;
}

const BitMatrix& SpaceDescription::step_closure_rev() const {
    if (!step_closure_rev_) step_closure_rev_ = step_closure().transposed();
    return *step_closure_rev_;
}

const BitMatrix& SpaceDescription::timelike_step_closure() const {
    if (!timelike_step_closure_)
        timelike_step_closure_ = closure_of(
            size(), [this](PointId u, PointId v) { return step_ok(u, v) && ll(u, v); });
    return *timelike_step_closure_;
}

}  // namespace lls
