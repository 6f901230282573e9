#include "infix/occurrence_list.hpp"

#include "infix/errors.hpp"

namespace infix {

namespace {

constexpr std::uint64_t kFnvBasis = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) noexcept { return (h ^ v) * kFnvPrime; }

}  // namespace

OccurrenceList::OccurrenceList(Pos n) : n_(n), prev_(n + 1, 0), next_(n + 1, 0), present_(n + 1, 0) {}

void OccurrenceList::insert(Pos i, Meter* m) {
    tick(m);
    INFIX_CHECK(i >= 1 && i <= n_ && !present_[i]);
    present_[i] = 1;
    prev_[i] = tail_;
    next_[i] = 0;
    if (tail_) next_[tail_] = i;
    else head_ = i;
    tail_ = i;
    ++count_;
    ++version_;
}

void OccurrenceList::erase(Pos i, Meter* m) {
    tick(m);
    INFIX_CHECK(i >= 1 && i <= n_ && present_[i]);
    present_[i] = 0;
    if (prev_[i]) next_[prev_[i]] = next_[i];
    else head_ = next_[i];
    if (next_[i]) prev_[next_[i]] = prev_[i];
    else tail_ = prev_[i];
    prev_[i] = next_[i] = 0;
    --count_;
    ++version_;
}

std::optional<Pos> OccurrenceList::Cursor::next() {
    INFIX_CHECK(list_ == nullptr || version_ == list_->version_);
    if (node_ == 0) return std::nullopt;
    Pos v = node_;
    node_ = list_->next_[node_];
    return v;
}

std::vector<Pos> OccurrenceList::to_vector() const {
    std::vector<Pos> out;
    out.reserve(count_);
    for (Pos i = head_; i; i = next_[i]) out.push_back(i);
    return out;
}

std::uint64_t OccurrenceList::checksum() const noexcept {
    std::uint64_t h = kFnvBasis;
    h = mix(h, head_);
    h = mix(h, tail_);
    h = mix(h, count_);
    h = mix(h, version_);
    for (Pos i = 0; i <= n_; ++i) {
        h = mix(h, prev_[i]);
        h = mix(h, next_[i]);
        h = mix(h, present_[i]);
    }
    return h;
}

LetterIndex::LetterIndex(std::span<const Letter> word, std::size_t k, Meter* m) {
    const Pos n = static_cast<Pos>(word.size());
    word_.reserve(word.size() + 1);
    word_.push_back(0);
    word_.insert(word_.end(), word.begin(), word.end());
    lists_.reserve(k);
    for (std::size_t a = 0; a < k; ++a) lists_.emplace_back(n);
    for (Pos i = 1; i <= n; ++i) {
        INFIX_CHECK(word_[i] < k);
        lists_[word_[i]].insert(i, m);
    }
}

Letter LetterIndex::apply_substitution(Pos i, Letter a, Meter* m) {
    if (i < 1 || i > size()) throw std::out_of_range("position out of range");
    if (a >= lists_.size()) throw std::out_of_range("letter out of range");
    Letter b = word_[i];
    tick(m);
    ++version_;
    if (b == a) return b;
    lists_[b].erase(i, m);
    lists_[a].insert(i, m);
    word_[i] = a;
    return b;
}

std::uint64_t LetterIndex::checksum() const noexcept {
    std::uint64_t h = kFnvBasis;
    for (Letter a : word_) h = mix(h, a);
    for (const auto& l : lists_) h = mix(h, l.checksum());
    return mix(h, version_);
}

std::size_t LetterIndex::cells() const noexcept {
    std::size_t c = word_.size() + 1;
    for (const auto& l : lists_) c += l.cells();
    return c;
}

bool LetterIndex::audit() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < lists_.size(); ++a) {
        std::uint32_t seen = 0;
        auto cur = lists_[a].retrieve();
        while (auto i = cur.next()) {
            if (word_[*i] != a) return false;
            ++seen;
        }
        if (seen != lists_[a].count()) return false;
        total += seen;
    }
    if (total != size()) return false;
    for (Pos i = 1; i <= size(); ++i)
        if (!lists_[word_[i]].contains(i)) return false;
    return true;
}

}  // namespace infix
