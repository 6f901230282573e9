#include "infix/simple_enum.hpp"

#include "infix/errors.hpp"

namespace infix {

SimpleSession::SimpleSession(MembershipOracle& psi, std::span<const Letter> word, Letter neutral, Meter* meter)
    : psi_(&psi), w_(word), e_(neutral), meter_(meter), n_(static_cast<Pos>(word.size() - 1)) {
    INFIX_CHECK(psi.size() == n_);
    psi_->acquire();
}

SimpleSession::~SimpleSession() {
    if (phase_ != Phase::Done) psi_->resync(w_.subspan(1));
    psi_->release();
}

void SimpleSession::set(Pos i, Letter a) {
    tick(meter_);
    psi_->update(i, a);
}

void SimpleSession::begin_enumerate(Pos l, Phase ret) {
    el_ = l;
    ret_ = ret;
    phase_ = Phase::EnumStart;
}

void SimpleSession::finish_enumerate(bool produced) {
    produced_ = produced;
    phase_ = ret_;
}

std::optional<Infix> SimpleSession::next() {
    for (;;) {
        tick(meter_);
        switch (phase_) {
            case Phase::Forward:
                if (l_ > n_) {
                    l_ = n_;
                    phase_ = Phase::Backward;
                } else if (l_ % 2 == 0) {
                    begin_enumerate(l_, Phase::ForwardAfter);
                } else {
                    set(l_, e_);
                    ++l_;
                }
                break;
            case Phase::ForwardAfter:
                if (!produced_) {
                    // Nothing starts at l, so nothing starts further right either.
                    phase_ = Phase::Backward;
                } else {
                    set(l_, e_);
                    ++l_;
                    phase_ = Phase::Forward;
                }
                break;
            case Phase::Backward:
                if (l_ < 1) {
                    phase_ = Phase::Done;
                    break;
                }
                set(l_, w_[l_]);
                if (l_ % 2 == 1) begin_enumerate(l_, Phase::BackwardAfter);
                else --l_;
                break;
            case Phase::BackwardAfter:
                --l_;
                phase_ = Phase::Backward;
                break;
            case Phase::EnumStart:
                r_ = n_;
                if (!psi_->test()) finish_enumerate(false);
                else phase_ = Phase::EnumDown;
                break;
            case Phase::EnumDown:
                if (r_ >= el_ && psi_->test()) {
                    Pos r = r_;
                    set(r_, e_);
                    --r_;
                    if (r % 2 == 0) return Infix{el_, r};
                } else {
                    phase_ = Phase::EnumUp;
                }
                break;
            case Phase::EnumUp:
                if (r_ < n_) {
                    ++r_;
                    set(r_, w_[r_]);
                    if (r_ % 2 == 1) return Infix{el_, r_};
                } else {
                    finish_enumerate(true);
                }
                break;
            case Phase::Done:
                return std::nullopt;
        }
    }
}

}  // namespace infix
