#include "infix/engine.hpp"

#include <stdexcept>

#include "infix/errors.hpp"
#include "infix/semiext_enum.hpp"
#include "infix/simple_enum.hpp"

namespace infix {

const char* to_string(Strategy s) noexcept {
    switch (s) {
        case Strategy::Adhoc: return "adhoc";
        case Strategy::Semiext: return "semiext";
        case Strategy::SimpleOracle: return "simple+oracle";
        case Strategy::OracleOnly: return "oracle-only";
    }
    return "?";
}

Plan plan_language(const Language& lang) {
    Plan plan;
    plan.adhoc = adhoc_fingerprint(lang.dfa);
    try {
        plan.report = classify(lang.dfa);
    } catch (const MonoidTooLarge&) {
    }
    if (plan.report && lang.neutral_hint && (*lang.neutral_hint & ~plan.report->neutral) != 0)
        throw std::invalid_argument("neutral-hint names a letter that is not neutral");

    if (plan.report && plan.report->is_semi_extensible_zg) {
        plan.threshold_in_use = plan.report->threshold;
        if (lang.threshold_hint) {
            CondFamily family(lang.dfa, plan.report->neutral, *lang.threshold_hint);
            auto check = verify_threshold_exact(lang.dfa, family, *lang.threshold_hint);
            if (check && !check->ok) throw std::invalid_argument("threshold-hint does not satisfy the threshold condition");
            if (check) plan.threshold_in_use = *lang.threshold_hint;
        }
    }
    if (plan.report && plan.report->is_extensible && plan.report->neutral != 0) {
        for (Letter a = 0; a < lang.dfa.k; ++a)
            if (has_letter(plan.report->neutral, a)) {
                plan.neutral_letter = a;
                break;
            }
    }

    if (plan.adhoc) plan.strategy = Strategy::Adhoc;
    else if (plan.report && plan.report->is_semi_extensible_zg) plan.strategy = Strategy::Semiext;
    else if (plan.neutral_letter) plan.strategy = Strategy::SimpleOracle;
    else plan.strategy = Strategy::OracleOnly;
    return plan;
}

namespace {

/// Runs the automaton from every start position in turn. Delay is linear in n.
class BruteCursor final : public InfixCursor {
public:
    BruteCursor(const Dfa& dfa, const LetterIndex& index, Meter* meter)
        : dfa_(&dfa), index_(&index), w_(index.word()), version_(index.version()), n_(index.size()), meter_(meter) {}

    std::optional<Infix> next() override {
        if (index_->version() != version_) throw StaleSession("word was updated after the enumeration started");
        while (i_ <= n_) {
            if (j_ < i_) {
                j_ = i_;
                q_ = dfa_->initial;
            }
            while (j_ <= n_) {
                tick(meter_);
                q_ = dfa_->next(q_, w_[j_]);
                Pos j = j_++;
                if (dfa_->is_accepting(q_)) return Infix{i_, j};
            }
            ++i_;
            j_ = 0;
        }
        return std::nullopt;
    }
    [[nodiscard]] std::size_t cells() const noexcept override { return 8; }

private:
    const Dfa* dfa_;
    const LetterIndex* index_;
    std::span<const Letter> w_;
    std::uint64_t version_;
    Pos n_;
    Meter* meter_;
    Pos i_ = 1, j_ = 0;
    State q_ = 0;
};

}  // namespace

Engine::Engine(const Language& lang, std::span<const Letter> word, Meter* meter)
    : lang_(&lang), meter_(meter), plan_(plan_language(lang)) {
    init(word);
}

Engine::Engine(const Language& lang, std::span<const Letter> word, Strategy forced, Meter* meter)
    : lang_(&lang), meter_(meter), plan_(plan_language(lang)) {
    bool ok = true;
    switch (forced) {
        case Strategy::Adhoc: ok = plan_.adhoc.has_value(); break;
        case Strategy::Semiext: ok = plan_.report && plan_.report->is_semi_extensible_zg; break;
        case Strategy::SimpleOracle: ok = plan_.neutral_letter.has_value(); break;
        case Strategy::OracleOnly: break;
    }
    if (!ok) throw UnsupportedLanguage(std::string("language does not qualify for strategy ") + to_string(forced));
    plan_.strategy = forced;
    init(word);
}

void Engine::init(std::span<const Letter> word) {
    for (Letter a : word)
        if (a >= lang_->dfa.k) throw std::invalid_argument("word uses a letter outside the alphabet");
    index_ = LetterIndex(word, lang_->dfa.k, meter_);
    if (plan_.strategy == Strategy::SimpleOracle) {
        monoid_ = std::make_unique<Monoid>(lang_->dfa);
        tree_ = std::make_unique<MonoidTree>(word, *monoid_, meter_);
    } else if (plan_.strategy == Strategy::Semiext) {
        family_ = std::make_unique<CondFamily>(lang_->dfa, plan_.report->neutral, *plan_.threshold_in_use);
    }
}

void Engine::update(Pos i, Letter a) {
    if (i < 1 || i > index_.size()) throw std::out_of_range("position out of range");
    if (a >= lang_->dfa.k) throw std::invalid_argument("letter outside the alphabet");
    if (tree_ && tree_->leased()) throw UpdateDuringEnumeration("an even-odd enumeration is still running");
    index_.apply_substitution(i, a, meter_);
    if (tree_) tree_->update(i, a);
}

bool Engine::member() const {
    if (tree_) return tree_->test();
    return lang_->dfa.accepts(index_.word().subspan(1));
}

std::unique_ptr<InfixCursor> Engine::enumerate() {
    switch (plan_.strategy) {
        case Strategy::Adhoc: return std::make_unique<AdhocSession>(index_, *plan_.adhoc, meter_);
        case Strategy::Semiext: return std::make_unique<SemiextSession>(index_, lang_->dfa, *family_, meter_);
        case Strategy::SimpleOracle:
            if (tree_->leased()) throw UpdateDuringEnumeration("an even-odd enumeration is already running");
            return std::make_unique<SimpleSession>(*tree_, index_.word(), *plan_.neutral_letter, meter_);
        case Strategy::OracleOnly: return std::make_unique<BruteCursor>(lang_->dfa, index_, meter_);
    }
    return nullptr;
}

std::size_t Engine::cells() const noexcept {
    std::size_t c = index_.cells();
    if (tree_) c += tree_->cells();
    return c;
}

void Engine::set_meter(Meter* meter) noexcept {
    meter_ = meter;
    if (tree_) tree_->set_meter(meter);
}

}  // namespace infix
