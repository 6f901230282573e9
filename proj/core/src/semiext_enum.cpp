#include "infix/semiext_enum.hpp"

#include <algorithm>

#include "infix/errors.hpp"

namespace infix {

std::size_t combine_left_lists(std::span<const Pos> outer, std::span<const Pos> inner, std::uint32_t p, Pos* out) {
    // Walk both lists from their largest element. out must not alias the inputs.
    std::size_t i = inner.size();
    std::size_t o = outer.size();
    std::size_t n = 0;
    Pos last = 0;
    bool any = false;
    while (n < p && (i > 0 || o > 0)) {
        Pos x;
        if (o == 0 || (i > 0 && inner[i - 1] >= outer[o - 1])) x = inner[--i];
        else x = outer[--o];
        if (any && x == last) continue;
        out[n++] = x;
        last = x;
        any = true;
    }
    std::reverse(out, out + n);
    return n;
}

SemiextSession::SemiextSession(const LetterIndex& index, const Dfa& dfa, const CondFamily& family, Meter* meter)
    : index_(&index),
      dfa_(&dfa),
      family_(&family),
      meter_(meter),
      w_(index.word()),
      version_(index.version()),
      n_(index.size()),
      p_(family.threshold()),
      k_(static_cast<std::uint32_t>(index.letters())),
      neutral_(family.neutral()) {
    INFIX_CHECK(p_ >= 2);
    INFIX_CHECK(family.letters() == k_ && dfa.k == k_);
    nn_slot_.assign(k_, -1);
    for (std::uint32_t a = 0; a < k_; ++a)
        if (!has_letter(neutral_, static_cast<Letter>(a))) {
            nn_slot_[a] = static_cast<int>(nn_letter_.size());
            nn_letter_.push_back(static_cast<Letter>(a));
        }
    kn_ = static_cast<std::uint32_t>(nn_letter_.size());
    const std::size_t kp = std::size_t{kn_} * p_;

    nocc_.resize(k_);
    nocc2_.resize(k_);
    for (std::uint32_t a = 0; a < k_; ++a) nocc_[a] = index.count(static_cast<Letter>(a));
    delta_.resize(kp);
    delta_n_.resize(kn_);
    for (RiBuf* R : {&ri_, &ri_prev_}) {
        R->head.resize(kn_);
        R->size.resize(kn_);
        R->mu.resize(kp);
        R->list.resize(kp * kp);
        R->list_n.resize(kp * kn_);
    }
    for (LiBuf* L : {&li_, &li_prev_}) {
        L->last.resize(kp);
        L->n.resize(kn_);
    }
    min_.resize(kn_);
    max_.resize(kn_);
    min_buf_.resize(kp);
    max_buf_.resize(kp);
    min_n_.resize(kn_);
    max_n_.resize(kn_);
    tmp_a_.resize(p_);
    tmp_b_.resize(p_);
    merge_at_.resize(kn_);
    rem_pos_.resize(std::size_t{kn_} * (p_ - 1) + 2);
    rem_let_.resize(rem_pos_.size());
    eps_in_l_ = dfa.is_accepting(dfa.initial);

    for (std::uint32_t s = 0; s < kn_; ++s) {
        const auto& list = index.list(nn_letter_[s]);
        min_[s].cur = list.retrieve();
        min_[s].total = list.count();
        min_[s].active = true;
    }

    cells_ = nocc_.size() + nocc2_.size() + delta_.size() + delta_n_.size() + nn_slot_.size() + nn_letter_.size() +
             min_buf_.size() + max_buf_.size() + min_n_.size() + max_n_.size() + tmp_a_.size() + tmp_b_.size() +
             merge_at_.size() + rem_pos_.size() + rem_let_.size() + 6 * (min_.size() + max_.size()) + 40;
    for (const RiBuf* R : {&ri_, &ri_prev_})
        cells_ += R->head.size() + R->size.size() + R->mu.size() + R->list.size() + R->list_n.size() + 1;
    for (const LiBuf* L : {&li_, &li_prev_}) cells_ += L->last.size() + L->n.size() + 1;
}

std::optional<Infix> SemiextSession::next() {
    if (index_->version() != version_) throw StaleSession("word was updated after the enumeration started");
    for (;;) {
        tick(meter_);
        switch (phase_) {
            case Phase::StartL:
                start_l();
                phase_ = Phase::Test;
                break;
            case Phase::Test:
                if (t_mask_ != 0 && cond_test()) {
                    ri_add(ri_, r_);
                    if (obs_) {
                        export_ri(ri_, scratch_ri_);
                        obs_->on_right_info(l_, scratch_ri_);
                    }
                    phase_ = Phase::AfterOutput;
                    return Infix{l_, r_};
                }
                if (obs_) obs_->on_limit(l_, r_ + 1);
                if (t_mask_ != 0) {
                    // No shorter infix starting at l can be in L; if none
                    // was found at all, none starting further right is either.
                    phase_ = r_ == n_ ? Phase::Done : Phase::EndL;
                } else if (r_ == n_) {
                    begin_remaining(false, n_, Phase::Done);
                    phase_ = Phase::Remaining;
                } else {
                    begin_remaining(true, r_, Phase::EndL);
                    phase_ = Phase::Remaining;
                }
                break;
            case Phase::AfterOutput:
                after_output();
                phase_ = Phase::Test;
                break;
            case Phase::EndL:
                end_l();
                break;
            case Phase::Remaining: {
                Infix out;
                if (remaining_next(out)) return out;
                phase_ = rem_.after;
                break;
            }
            case Phase::Done:
                return std::nullopt;
        }
    }
}

void SemiextSession::start_l() {
    r_ = n_;
    std::copy(nocc_.begin(), nocc_.end(), nocc2_.begin());
    ri_reset(ri_);
    t_mask_ = 0;
    for (std::uint32_t s = 0; s < kn_; ++s) {
        tick(meter_);
        delta_n_[s] = 0;
        if (nocc2_[nn_letter_[s]] >= p_) t_mask_ |= letter_bit(nn_letter_[s]);
    }
    for (std::uint32_t s = 0; s < kn_; ++s)
        if (nocc2_[nn_letter_[s]] < p_) get_rare_single(nn_letter_[s], n_);
}

void SemiextSession::after_output() {
    const Letter a = w_[r_];
    const int s = slot(a);
    if (s >= 0) {
        --nocc2_[a];
        if (nocc2_[a] == p_ - 1) t_mask_ &= ~letter_bit(a);
    }
    step_traversals();
    if (s >= 0) {
        if (nocc2_[a] == p_ - 1) {
            get_rare_single(a, r_ - 1);
        } else if (nocc2_[a] < p_ - 1) {
            auto& cnt = delta_n_[static_cast<std::size_t>(s)];
            INFIX_CHECK(cnt > 0 && delta_[static_cast<std::size_t>(s) * p_ + cnt - 1] == r_);
            --cnt;
        }
    }
    --r_;
}

void SemiextSession::end_l() {
    const Pos rl = r_ + 1;
    if (l_ == 1) {
        r1_ = rl;
        for (std::uint32_t s = 0; s < kn_; ++s) {
            tick(meter_);
            const auto& list = index_->list(nn_letter_[s]);
            max_[s].cur = list.retrieve();
            max_[s].total = list.count();
            max_[s].visited = 0;
            max_[s].active = true;
            max_n_[s] = 0;
            li_.n[s] = 0;
        }
        maxleft_started_ = true;
        if (int s = slot(w_[rl]); s >= 0) {
            li_.last[static_cast<std::size_t>(s) * p_] = rl;
            li_.n[static_cast<std::size_t>(s)] = 1;
        }
        li_.rl = rl;
    } else {
        update_li();
    }
    if (obs_) obs_->on_left_info(l_, left_info_of(li_));
    std::swap(ri_, ri_prev_);
    std::swap(li_, li_prev_);
    prev_limit_ = rl;
    if (slot(w_[l_]) >= 0) --nocc_[w_[l_]];
    ++l_;
    step_traversals();
    phase_ = l_ > n_ ? Phase::Done : Phase::StartL;
}

void SemiextSession::step_traversals() {
    if (l_ == 1) {
        for (std::uint32_t s = 0; s < kn_; ++s)
            if (min_[s].active && !min_[s].finished) step_one(s);
    } else if (maxleft_started_) {
        for (std::uint32_t s = 0; s < kn_; ++s)
            if (max_[s].active && !max_[s].finished) step_one(s);
    }
}

void SemiextSession::step_one(std::uint32_t s) {
    tick(meter_);
    const bool is_min = l_ == 1;
    Traversal& tr = is_min ? min_[s] : max_[s];
    if (tr.visited == tr.total) return;
    auto x = tr.cur.next();
    INFIX_CHECK(x.has_value());
    ++tr.visited;
    Pos* buf = (is_min ? min_buf_.data() : max_buf_.data()) + std::size_t{s} * p_;
    std::uint32_t& n = is_min ? min_n_[s] : max_n_[s];
    if (is_min) {
        // Keep the p smallest, ascending.
        if (n == p_ && *x >= buf[n - 1]) return;
        std::uint32_t at = n == p_ ? n - 1 : n++;
        while (at > 0 && buf[at - 1] > *x) {
            buf[at] = buf[at - 1];
            --at;
        }
        buf[at] = *x;
    } else {
        // Keep the p largest positions <= r1, ascending.
        if (*x > r1_) return;
        if (n == p_ && *x <= buf[0]) return;
        std::uint32_t at;
        if (n == p_) {
            at = 0;
            while (at + 1 < n && buf[at + 1] < *x) {
                buf[at] = buf[at + 1];
                ++at;
            }
        } else {
            at = n++;
            while (at > 0 && buf[at - 1] > *x) {
                buf[at] = buf[at - 1];
                --at;
            }
        }
        buf[at] = *x;
    }
}

void SemiextSession::finish_traversal(std::uint32_t s) {
    Traversal& tr = l_ == 1 ? min_[s] : max_[s];
    if (tr.finished) return;
    // Enough of the list has been swept by r and l that at most p remain.
    INFIX_CHECK(tr.total - tr.visited <= p_);
    while (tr.visited < tr.total) step_one(s);
    tr.finished = true;
    if (obs_) {
        const bool is_min = l_ == 1;
        const Pos* buf = (is_min ? min_buf_.data() : max_buf_.data()) + std::size_t{s} * p_;
        obs_->on_traversal_finished(nn_letter_[s], !is_min, {buf, is_min ? min_n_[s] : max_n_[s]});
    }
}

void SemiextSession::get_rare_single(Letter a, Pos r_hi) {
    const auto s = static_cast<std::uint32_t>(slot(a));
    Pos* out = delta_.data() + std::size_t{s} * p_;
    std::uint32_t n = 0;
    if (l_ == 1) {
        finish_traversal(s);
        const Pos* buf = min_buf_.data() + std::size_t{s} * p_;
        for (std::uint32_t t = 0; t < min_n_[s]; ++t) {
            tick(meter_);
            if (buf[t] <= r_hi) out[n++] = buf[t];
        }
    } else {
        INFIX_CHECK(maxleft_started_);
        finish_traversal(s);
        // Last a's left of the previous limit, then the tracked a's right of it.
        std::span<const Pos> ml(max_buf_.data() + std::size_t{s} * p_, max_n_[s]);
        std::span<const Pos> li(li_prev_.last.data() + std::size_t{s} * p_, li_prev_.n[s]);
        std::size_t na = combine_left_lists(ml, li, p_, tmp_a_.data());
        std::uint32_t nb = 0;
        for (std::uint32_t i = 0; i < ri_prev_.size[s]; ++i) {
            tick(meter_);
            Pos mu = ri_mu(ri_prev_, s, i);
            if (mu <= r_hi) tmp_b_[nb++] = mu;
        }
        tick(meter_, na + nb);
        std::size_t nc = combine_left_lists({tmp_a_.data(), na}, {tmp_b_.data(), nb}, p_, out);
        for (std::size_t t = 0; t < nc; ++t)
            if (out[t] >= l_ && out[t] <= r_hi) out[n++] = out[t];
    }
    INFIX_CHECK(n < p_);
    delta_n_[s] = n;
    if (obs_) obs_->on_rare(a, l_, r_hi, {out, n});
}

bool SemiextSession::cond_test() {
    const Dfa& cond = family_->automaton(t_mask_);
    State q = cond.initial;
    for (std::uint32_t s = 0; s < kn_; ++s) merge_at_[s] = 0;
    for (;;) {
        int best = -1;
        Pos best_pos = 0;
        for (std::uint32_t s = 0; s < kn_; ++s) {
            tick(meter_);
            if (has_letter(t_mask_, nn_letter_[s]) || merge_at_[s] == delta_n_[s]) continue;
            Pos x = delta_[std::size_t{s} * p_ + merge_at_[s]];
            if (best < 0 || x < best_pos) {
                best = static_cast<int>(s);
                best_pos = x;
            }
        }
        if (best < 0) break;
        ++merge_at_[static_cast<std::size_t>(best)];
        q = cond.next(q, nn_letter_[static_cast<std::size_t>(best)]);
    }
    return cond.is_accepting(q);
}

void SemiextSession::ri_reset(RiBuf& R) {
    for (std::uint32_t s = 0; s < kn_; ++s) {
        tick(meter_);
        R.head[s] = 0;
        R.size[s] = 0;
    }
    R.r = n_ + 1;
}

void SemiextSession::ri_add(RiBuf& R, Pos r) {
    R.r = r;
    const int sc_i = slot(w_[r]);
    if (sc_i < 0) return;
    const auto sc = static_cast<std::uint32_t>(sc_i);
    // r joins the left context of every tracked position not yet holding p letters w[r].
    for (std::uint32_t s = 0; s < kn_; ++s)
        for (std::uint32_t i = 0; i < R.size[s]; ++i) {
            tick(meter_);
            std::size_t idx = ri_slot(R, s, i);
            std::uint32_t& ln = R.list_n[idx * kn_ + sc];
            if (ln < p_) R.list[(idx * kn_ + sc) * p_ + ln++] = r;
        }
    // r becomes the first tracked occurrence of its letter.
    if (R.size[sc] == p_) --R.size[sc];
    R.head[sc] = (R.head[sc] + p_ - 1) % p_;
    ++R.size[sc];
    std::size_t idx = ri_slot(R, sc, 0);
    R.mu[idx] = r;
    for (std::uint32_t b = 0; b < kn_; ++b) {
        tick(meter_);
        R.list_n[idx * kn_ + b] = 0;
    }
    R.list[(idx * kn_ + sc) * p_] = r;
    R.list_n[idx * kn_ + sc] = 1;
}

void SemiextSession::update_li() {
    const Pos rl = r_ + 1;
    li_.rl = rl;
    if (rl == prev_limit_) {
        tick(meter_, li_.last.size());
        std::copy(li_prev_.last.begin(), li_prev_.last.end(), li_.last.begin());
        std::copy(li_prev_.n.begin(), li_prev_.n.end(), li_.n.begin());
        return;
    }
    const int sc_i = slot(w_[rl]);
    if (sc_i < 0) throw InternalError("LimitNotTracked: limit at a neutral position");
    const auto sc = static_cast<std::uint32_t>(sc_i);
    std::size_t idx = 0;
    bool found = false;
    for (std::uint32_t i = 0; i < ri_prev_.size[sc] && !found; ++i) {
        tick(meter_);
        if (ri_mu(ri_prev_, sc, i) == rl) {
            idx = ri_slot(ri_prev_, sc, i);
            found = true;
        }
    }
    if (!found) throw InternalError("LimitNotTracked: new limit is not tracked by the previous right information");
    for (std::uint32_t b = 0; b < kn_; ++b) {
        std::uint32_t ln = ri_prev_.list_n[idx * kn_ + b];
        const Pos* src = ri_prev_.list.data() + (idx * kn_ + b) * p_;
        for (std::uint32_t t = 0; t < ln; ++t) tmp_b_[t] = src[ln - 1 - t];
        tick(meter_, ln + li_prev_.n[b]);
        std::span<const Pos> outer(li_prev_.last.data() + std::size_t{b} * p_, li_prev_.n[b]);
        li_.n[b] = static_cast<std::uint32_t>(
            combine_left_lists(outer, {tmp_b_.data(), ln}, p_, li_.last.data() + std::size_t{b} * p_));
    }
}

void SemiextSession::begin_remaining(bool left_fixed, Pos hi, Phase after) {
    rem_ = Remaining{};
    rem_.left_fixed = left_fixed;
    rem_.after = after;
    rem_hi_ = hi;
    rem_lo_ = l_;
    // All non-neutral letters are rare: Delta holds the non-neutral subword of w[l, hi].
    for (std::uint32_t s = 0; s < kn_; ++s) {
        INFIX_CHECK(delta_n_[s] < p_);
        merge_at_[s] = 0;
    }
    std::uint32_t m = 0;
    rem_pos_[0] = l_ - 1;
    for (;;) {
        int best = -1;
        Pos best_pos = 0;
        for (std::uint32_t s = 0; s < kn_; ++s) {
            tick(meter_);
            if (merge_at_[s] == delta_n_[s]) continue;
            Pos x = delta_[std::size_t{s} * p_ + merge_at_[s]];
            if (best < 0 || x < best_pos) {
                best = static_cast<int>(s);
                best_pos = x;
            }
        }
        if (best < 0) break;
        ++merge_at_[static_cast<std::size_t>(best)];
        ++m;
        rem_pos_[m] = best_pos;
        rem_let_[m] = nn_letter_[static_cast<std::size_t>(best)];
    }
    rem_pos_[m + 1] = hi + 1;
    rem_.m = m;
    rem_.i = 1;
    rem_.j = 1;
    rem_.q = dfa_->initial;
    rem_.stage = 0;
}

bool SemiextSession::remaining_next(Infix& out) {
    Remaining& R = rem_;
    const Pos* pos = rem_pos_.data();
    for (;;) {
        tick(meter_);
        if (R.stage == 0) {
            if (R.i > R.m || (R.left_fixed && R.i > 1)) {
                R.stage = 1;
                R.gap = 1;
                R.lp = 0;
                continue;
            }
            if (R.j > R.m) {
                ++R.i;
                R.j = R.i;
                R.q = dfa_->initial;
                continue;
            }
            if (R.lp == 0) {
                R.q = dfa_->next(R.q, rem_let_[R.j]);
                if (!dfa_->is_accepting(R.q)) {
                    ++R.j;
                    continue;
                }
                R.lp = R.left_fixed ? rem_lo_ : pos[R.i];
                R.rp = pos[R.j];
            }
            out = Infix{R.lp, R.rp};
            if (R.rp + 1 < pos[R.j + 1]) {
                ++R.rp;
            } else {
                R.rp = pos[R.j];
                if (!R.left_fixed && R.lp > pos[R.i - 1] + 1) {
                    --R.lp;
                } else {
                    R.lp = 0;
                    ++R.j;
                }
            }
            return true;
        }
        if (R.stage == 1) {
            // Infixes made only of neutral letters, inside the gaps between rare letters.
            if (!eps_in_l_ || R.gap > R.m + 1 || (R.left_fixed && R.gap > 1)) {
                R.stage = 2;
                continue;
            }
            Pos lo = pos[R.gap - 1] + 1;
            Pos hi = pos[R.gap] - 1;
            if (R.lp == 0) {
                if (lo > hi || pos[R.gap] == 0) {
                    ++R.gap;
                    continue;
                }
                R.lp = lo;
                R.rp = lo;
                R.gap_hi = hi;
            }
            out = Infix{R.lp, R.rp};
            if (R.rp < R.gap_hi) {
                ++R.rp;
            } else if (!R.left_fixed && R.lp < R.gap_hi) {
                ++R.lp;
                R.rp = R.lp;
            } else {
                R.lp = 0;
                ++R.gap;
            }
            return true;
        }
        return false;
    }
}

void SemiextSession::export_ri(const RiBuf& R, RightInfo& out) const {
    out.r = R.r;
    out.tracked.assign(k_, {});
    for (std::uint32_t s = 0; s < kn_; ++s) {
        auto& vec = out.tracked[nn_letter_[s]];
        for (std::uint32_t i = 0; i < R.size[s]; ++i) {
            std::size_t idx = ri_slot(R, s, i);
            RightInfo::Tracked t;
            t.mu = R.mu[idx];
            t.left.assign(k_, {});
            for (std::uint32_t b = 0; b < kn_; ++b) {
                std::uint32_t ln = R.list_n[idx * kn_ + b];
                const Pos* src = R.list.data() + (idx * kn_ + b) * p_;
                auto& dst = t.left[nn_letter_[b]];
                for (std::uint32_t x = 0; x < ln; ++x) dst.push_back(src[ln - 1 - x]);
            }
            vec.push_back(std::move(t));
        }
    }
}

LeftInfo SemiextSession::left_info_of(const LiBuf& L) const {
    LeftInfo out;
    out.r1 = r1_;
    out.rl = L.rl;
    out.last.assign(k_, {});
    for (std::uint32_t s = 0; s < kn_; ++s)
        out.last[nn_letter_[s]].assign(L.last.begin() + std::ptrdiff_t{s} * p_, L.last.begin() + std::ptrdiff_t{s} * p_ + L.n[s]);
    return out;
}

RightInfo SemiextSession::right_info() const {
    RightInfo out;
    export_ri(ri_, out);
    return out;
}

LeftInfo SemiextSession::left_info() const { return left_info_of(li_prev_); }

}  // namespace infix
