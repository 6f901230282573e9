#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "infix/adhoc_enum.hpp"
#include "infix/classify.hpp"
#include "infix/cond.hpp"
#include "infix/cursor.hpp"
#include "infix/language.hpp"
#include "infix/meter.hpp"
#include "infix/monoid.hpp"
#include "infix/monoid_tree.hpp"
#include "infix/occurrence_list.hpp"

namespace infix {

enum class Strategy : std::uint8_t { Adhoc, Semiext, SimpleOracle, OracleOnly };

/// "adhoc", "semiext", "simple+oracle", "oracle-only".
const char* to_string(Strategy s) noexcept;

/// Classification and strategy for a language, independent of any word.
struct Plan {
    std::optional<ClassificationReport> report;  // empty if the monoid is too large
    Strategy strategy = Strategy::OracleOnly;
    std::optional<AdhocMatch> adhoc;
    /// Threshold used by the semiext strategy: a verified hint, else the default.
    std::optional<std::uint32_t> threshold_in_use;
    /// Letter written by the even-odd enumeration.
    std::optional<Letter> neutral_letter;
};

/// Selection order: ad-hoc fingerprint, semi-extensible ZG, extensible with a
/// neutral letter, brute force. Throws std::invalid_argument if a hint in the
/// language file does not hold.
Plan plan_language(const Language& lang);

/// A word under substitution updates together with the structures needed by
/// the selected enumeration strategy.
class Engine {
public:
    Engine(const Language& lang, std::span<const Letter> word, Meter* meter = nullptr);
    /// Uses the given strategy instead of the automatic choice. Throws
    /// UnsupportedLanguage if the language does not qualify for it.
    Engine(const Language& lang, std::span<const Letter> word, Strategy forced, Meter* meter = nullptr);
    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    [[nodiscard]] const Plan& plan() const noexcept { return plan_; }
    [[nodiscard]] Strategy strategy() const noexcept { return plan_.strategy; }
    [[nodiscard]] const Language& language() const noexcept { return *lang_; }
    [[nodiscard]] const LetterIndex& index() const noexcept { return index_; }
    [[nodiscard]] Pos size() const noexcept { return index_.size(); }
    [[nodiscard]] std::vector<Letter> word() const { return index_.current_word(); }

    /// Sets word[i] = a. Sessions started before become stale. Throws
    /// std::out_of_range for a bad position and UpdateDuringEnumeration while
    /// an even-odd session still has the membership tree checked out.
    void update(Pos i, Letter a);

    /// Is the whole word in L?
    [[nodiscard]] bool member() const;

    /// Starts a fresh enumeration of the L-infixes of the current word.
    [[nodiscard]] std::unique_ptr<InfixCursor> enumerate();

    /// Cells held by the engine itself (index, tree), excluding sessions.
    [[nodiscard]] std::size_t cells() const noexcept;
    [[nodiscard]] const MonoidTree* tree() const noexcept { return tree_.get(); }

    void set_meter(Meter* meter) noexcept;

private:
    void init(std::span<const Letter> word);

    const Language* lang_;
    Meter* meter_;
    Plan plan_;
    LetterIndex index_;
    std::unique_ptr<Monoid> monoid_;
    std::unique_ptr<MonoidTree> tree_;
    std::unique_ptr<CondFamily> family_;
};

}  // namespace infix
