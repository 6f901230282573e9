#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infix/cond.hpp"
#include "infix/cursor.hpp"
#include "infix/dfa.hpp"
#include "infix/info.hpp"
#include "infix/meter.hpp"
#include "infix/occurrence_list.hpp"

namespace infix {

/// Diagnostic hooks. Installing an observer allocates and is meant for tests.
class SemiextObserver {
public:
    virtual ~SemiextObserver() = default;
    /// Called after the right information has been advanced to r.
    virtual void on_right_info(Pos /*l*/, const RightInfo& /*ri*/) {}
    /// Called when the loop for l exits with limit rl.
    virtual void on_limit(Pos /*l*/, Pos /*rl*/) {}
    virtual void on_left_info(Pos /*l*/, const LeftInfo& /*li*/) {}
    /// Occurrences of a rare letter a in [l, r_hi] as computed by the session.
    /// A background traversal of the occurrences of a was finished: the <= p
    /// smallest positions (min) or the <= p largest positions <= r1 (max-left).
    virtual void on_traversal_finished(Letter /*a*/, bool /*maxleft*/, std::span<const Pos> /*buffer*/) {}
    virtual void on_rare(Letter /*a*/, Pos /*l*/, Pos /*r_hi*/, std::span<const Pos> /*occ*/) {}
};

/// Largest <= p positions of the union of two ascending lists, ascending and
/// deduplicated. out must have room for p entries and not alias the inputs. Returns the output size.
std::size_t combine_left_lists(std::span<const Pos> outer, std::span<const Pos> inner, std::uint32_t p, Pos* out);

/// Constant-delay, constant-memory enumeration for semi-extensible ZG
/// languages. Read-only over the word and the occurrence lists. Every buffer
/// is sized by the alphabet and the threshold at construction; next() does
/// not allocate unless an observer is installed.
class SemiextSession final : public InfixCursor {
public:
    SemiextSession(const LetterIndex& index, const Dfa& dfa, const CondFamily& family, Meter* meter = nullptr);

    /// Throws StaleSession once the index has been updated.
    std::optional<Infix> next() override;
    [[nodiscard]] std::size_t cells() const noexcept override { return cells_; }

    void set_observer(SemiextObserver* obs) noexcept { obs_ = obs; }

    [[nodiscard]] RightInfo right_info() const;
    [[nodiscard]] LeftInfo left_info() const;

private:
    enum class Phase : std::uint8_t { StartL, Test, AfterOutput, EndL, Remaining, Done };

    struct RiBuf {
        std::vector<std::uint32_t> head;  // per letter slot: ring start
        std::vector<std::uint32_t> size;  // per letter slot: tracked count
        std::vector<Pos> mu;              // [a * p + ring]
        std::vector<Pos> list;            // [((a * p + ring) * kn + b) * p + t], descending
        std::vector<std::uint32_t> list_n;
        Pos r = 0;
    };
    struct LiBuf {
        std::vector<Pos> last;  // [a * p + t], ascending
        std::vector<std::uint32_t> n;
        Pos rl = 0;
    };
    struct Traversal {
        OccurrenceList::Cursor cur;
        std::uint32_t visited = 0;
        std::uint32_t total = 0;
        bool active = false;
        bool finished = false;
    };

    // Remaining-phase enumeration of all infixes inside [l, hi] (or only those
    // starting at l), given the rare subword in Delta.
    struct Remaining {
        bool left_fixed = false;
        Phase after = Phase::Done;
        std::uint32_t m = 0;
        std::uint32_t i = 1, j = 1, gap = 1;
        State q = 0;
        Pos lp = 0, rp = 0;
        Pos gap_hi = 0;
        std::uint8_t stage = 0;
    };

    [[nodiscard]] int slot(Letter a) const noexcept { return nn_slot_[a]; }

    void start_l();
    void after_output();
    void end_l();
    void step_traversals();
    void step_one(std::uint32_t s);
    void finish_traversal(std::uint32_t s);
    void get_rare_single(Letter a, Pos r_hi);
    [[nodiscard]] bool cond_test();

    void ri_reset(RiBuf& R);
    void ri_add(RiBuf& R, Pos r);
    void update_li();
    void begin_remaining(bool left_fixed, Pos hi, Phase after);
    bool remaining_next(Infix& out);

    [[nodiscard]] Pos ri_mu(const RiBuf& R, std::uint32_t s, std::uint32_t i) const noexcept {
        return R.mu[s * p_ + (R.head[s] + i) % p_];
    }
    [[nodiscard]] std::size_t ri_slot(const RiBuf& R, std::uint32_t s, std::uint32_t i) const noexcept {
        return s * p_ + (R.head[s] + i) % p_;
    }
    void export_ri(const RiBuf& R, RightInfo& out) const;
    [[nodiscard]] LeftInfo left_info_of(const LiBuf& L) const;

    const LetterIndex* index_;
    const Dfa* dfa_;
    const CondFamily* family_;
    Meter* meter_;
    SemiextObserver* obs_ = nullptr;
    std::span<const Letter> w_;
    std::uint64_t version_;
    Pos n_;
    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t kn_;
    std::vector<int> nn_slot_;        // letter -> slot or -1
    std::vector<Letter> nn_letter_;   // slot -> letter
    LetterMask neutral_;

    Phase phase_ = Phase::StartL;
    Pos l_ = 1;
    Pos r_ = 0;
    Pos r1_ = 0;
    Pos prev_limit_ = 0;
    LetterMask t_mask_ = 0;
    std::vector<std::uint32_t> nocc_, nocc2_;
    std::vector<Pos> delta_;             // [s * p + t], ascending
    std::vector<std::uint32_t> delta_n_;

    RiBuf ri_, ri_prev_;
    LiBuf li_, li_prev_;
    bool maxleft_started_ = false;
    std::vector<Traversal> min_, max_;
    std::vector<Pos> min_buf_, max_buf_;  // [s * p + t], ascending
    std::vector<std::uint32_t> min_n_, max_n_;

    std::vector<Pos> tmp_a_, tmp_b_;
    std::vector<std::uint32_t> merge_at_;
    std::vector<Pos> rem_pos_;
    std::vector<Letter> rem_let_;
    Remaining rem_;
    Pos rem_lo_ = 0, rem_hi_ = 0;
    bool eps_in_l_ = false;

    std::size_t cells_ = 0;
    RightInfo scratch_ri_;
};

}  // namespace infix
