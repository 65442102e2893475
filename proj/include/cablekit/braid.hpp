#ifndef CABLEKIT_BRAID_HPP
#define CABLEKIT_BRAID_HPP

// Braid words, closure analysis and the knot constructions built on them:
// torus braids, full twists, mirrors, connected sums, parallels, cables and
// twisted satellites.

#include <cablekit/error.hpp>

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace cablekit {

/// One generator sigma_index^sign.
struct Letter {
    int index = 1;
    int sign = 1;

    Letter inverse() const { return {index, -sign}; }
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Permutation of {1..m} stored 0-based: images[i] is the image of i.
class Permutation {
public:
    explicit Permutation(int size) : images_(static_cast<std::size_t>(size)) {
        std::iota(images_.begin(), images_.end(), 0);
    }

    int size() const noexcept { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& images() const noexcept { return images_; }

    /// Post-compose with the transposition of positions p and p+1 (0-based),
    /// i.e. a strand sitting at position p moves to p+1 and vice versa.
    void apply_adjacent_swap(int p) {
        for (int& v : images_) {
            if (v == p) v = p + 1;
            else if (v == p + 1) v = p;
        }
    }

    int cycle_count() const {
        std::vector<bool> seen(images_.size(), false);
        int cycles = 0;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
        }
        return cycles;
    }

    /// Cycles as lists of 0-based points, each starting at its smallest point.
    std::vector<std::vector<int>> cycles() const {
        std::vector<bool> seen(images_.size(), false);
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            auto& c = out.emplace_back();
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
                seen[j] = true;
                c.push_back(static_cast<int>(j));
            }
        }
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct ClosureSummary {
    int components = 1;
    std::int64_t exponent_sum = 0;
    int strands = 1;

    bool is_knot() const noexcept { return components == 1; }
    friend bool operator==(const ClosureSummary&, const ClosureSummary&) = default;
};

/// A word in the Artin generators of B_m with an explicit strand count.
class BraidWord {
public:
    explicit BraidWord(int strands = 1) : strands_(strands) {
        if (strands < 1) throw PreconditionError("a braid needs at least one strand");
    }

    BraidWord(int strands, std::vector<Letter> letters) : BraidWord(strands) {
        for (const Letter& l : letters) check_letter(l);
        letters_ = std::move(letters);
    }

    /// Signed-integer form: i > 0 is sigma_i, i < 0 is sigma_|i|^-1.
    static BraidWord from_signed(int strands, std::span<const int> generators) {
        BraidWord b(strands);
        for (int g : generators) {
            if (g == 0) throw ParseError("zero is not a braid generator", "0");
            b.push_back({std::abs(g), g > 0 ? 1 : -1});
        }
        return b;
    }
    static BraidWord from_signed(int strands, std::initializer_list<int> generators) {
        return from_signed(strands, std::span<const int>(generators.begin(), generators.size()));
    }

    int strands() const noexcept { return strands_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    void push_back(Letter l) {
        check_letter(l);
        letters_.push_back(l);
    }

    void insert(std::size_t position, Letter l) {
        if (position > letters_.size()) throw PreconditionError("insertion position past the end of the word");
        check_letter(l);
        letters_.insert(letters_.begin() + static_cast<std::ptrdiff_t>(position), l);
    }

    Letter erase(std::size_t position) {
        if (position >= letters_.size()) throw PreconditionError("deletion position past the end of the word");
        Letter l = letters_[position];
        letters_.erase(letters_.begin() + static_cast<std::ptrdiff_t>(position));
        return l;
    }

    /// Appends `other`, acting on strands offset+1 .. offset+other.strands().
    void append(const BraidWord& other, int offset = 0) {
        if (offset < 0 || offset + other.strands() > strands_)
            throw PreconditionError("appended braid does not fit in the strand range");
        for (const Letter& l : other.letters_) letters_.push_back({l.index + offset, l.sign});
    }

    std::int64_t exponent_sum() const noexcept {
        std::int64_t e = 0;
        for (const Letter& l : letters_) e += l.sign;
        return e;
    }

    Permutation permutation() const {
        Permutation p(strands_);
        for (const Letter& l : letters_) p.apply_adjacent_swap(l.index - 1);
        return p;
    }

    ClosureSummary closure() const {
        return {permutation().cycle_count(), exponent_sum(), strands_};
    }

    /// Canonical signed-integer text, single-space separated.
    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) os << ' ';
            os << letters_[i].index * letters_[i].sign;
        }
        return os.str();
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    void check_letter(const Letter& l) const {
        if (l.index < 1 || l.index > strands_ - 1)
            throw PreconditionError("generator index " + std::to_string(l.index) + " out of range for " +
                                    std::to_string(strands_) + " strands");
        if (l.sign != 1 && l.sign != -1) throw PreconditionError("letter sign must be +1 or -1");
    }

    int strands_ = 1;
    std::vector<Letter> letters_;
};

/// Parses whitespace-separated nonzero integers; |i| must be at most strands-1.
inline BraidWord parse_braid(std::string_view text, int strands) {
    if (strands < 1) throw PreconditionError("a braid needs at least one strand");
    BraidWord b(strands);
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("braid generator is not an integer", tok);
        }
        if (used != tok.size()) throw ParseError("braid generator is not an integer", tok);
        if (v == 0) throw ParseError("zero is not a braid generator", tok);
        if (std::llabs(v) > strands - 1)
            throw ParseError("generator index out of range for " + std::to_string(strands) + " strands", tok);
        b.push_back({static_cast<int>(std::llabs(v)), v > 0 ? 1 : -1});
    }
    return b;
}

inline ClosureSummary closure_summary(const BraidWord& b) { return b.closure(); }

/// (sigma_{m-1} ... sigma_1)^q; negative q gives the exact inverse word.
inline BraidWord torus_braid(int m, std::int64_t q) {
    BraidWord b(m);
    if (q >= 0) {
        for (std::int64_t k = 0; k < q; ++k)
            for (int i = m - 1; i >= 1; --i) b.push_back({i, 1});
    } else {
        for (std::int64_t k = 0; k < -q; ++k)
            for (int i = 1; i <= m - 1; ++i) b.push_back({i, -1});
    }
    return b;
}

/// beta followed by r full twists (sigma_{m-1} ... sigma_1)^{m r}.
inline BraidWord full_twists(const BraidWord& b, std::int64_t r) {
    BraidWord out = b;
    out.append(torus_braid(b.strands(), static_cast<std::int64_t>(b.strands()) * r));
    return out;
}

/// Every crossing switched: the closure becomes the mirror image.
inline BraidWord mirror(const BraidWord& b) {
    BraidWord out(b.strands());
    for (const Letter& l : b.letters()) out.push_back(l.inverse());
    return out;
}

/// The group inverse: reversed word with inverted letters. Its closure is the
/// mirror image with reversed orientation.
inline BraidWord inverse(const BraidWord& b) {
    BraidWord out(b.strands());
    for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it) out.push_back(it->inverse());
    return out;
}

/// Braid-closure connected sum: b is shifted up by strands(a) - 1 so the two
/// words share one strand.
inline BraidWord connected_sum(const BraidWord& a, const BraidWord& b) {
    if (!a.closure().is_knot() || !b.closure().is_knot())
        throw PreconditionError("connected_sum requires both closures to be knots");
    BraidWord out(a.strands() + b.strands() - 1);
    out.append(a);
    out.append(b, a.strands() - 1);
    return out;
}

/// The braid word exchanging two adjacent blocks of m strands, where the
/// left block starts at strand first_strand (1-based). Positive crossings
/// throughout for sign = +1; the exact inverse word for sign = -1.
inline std::vector<Letter> block_crossing(int first_strand, int m, int sign) {
    std::vector<Letter> word;
    word.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
    const int p = first_strand - 1;
    for (int k = 0; k < m; ++k)
        for (int i = p + m + k; i >= p + 1 + k; --i) word.push_back({i, 1});
    if (sign < 0) {
        std::vector<Letter> inv(word.rbegin(), word.rend());
        for (auto& l : inv) l.sign = -1;
        return inv;
    }
    return word;
}

/// Replaces each strand by m parallel strands (blackboard framing).
inline BraidWord m_parallel(const BraidWord& b, int m) {
    if (m < 1) throw PreconditionError("m_parallel requires m >= 1");
    if (m == 1) return b;
    BraidWord out(b.strands() * m);
    for (const Letter& l : b.letters())
        for (const Letter& x : block_crossing((l.index - 1) * m + 1, m, l.sign)) out.push_back(x);
    return out;
}

/// Braid whose closure is the (m, n)-cable of the companion's closure. The
/// blackboard framing of the parallel is corrected by n - m e full-strand
/// torus letters on the first block, e the companion's exponent sum.
inline BraidWord cable_braid(const BraidWord& companion, int m, std::int64_t n) {
    if (m < 1) throw PreconditionError("cable_braid requires m >= 1");
    if (!companion.closure().is_knot()) throw PreconditionError("cable companion closure is not a knot");
    BraidWord out = m_parallel(companion, m);
    out.append(torus_braid(m, n - static_cast<std::int64_t>(m) * companion.exponent_sum()));
    return out;
}

/// Braid whose closure is K_beta: the closed braid beta placed in a
/// 0-framed neighborhood of the companion.
inline BraidWord satellite_braid(const BraidWord& companion, const BraidWord& beta) {
    if (!companion.closure().is_knot()) throw PreconditionError("satellite companion closure is not a knot");
    if (!beta.closure().is_knot()) throw PreconditionError("satellite pattern closure is not a knot");
    const int m = beta.strands();
    BraidWord out = m_parallel(companion, m);
    out.append(torus_braid(m, -static_cast<std::int64_t>(m) * companion.exponent_sum()));
    out.append(beta);
    return out;
}

/// Appends sigma_i sigma_i^-1 for every generator index absent from b. The
/// braid group element, hence the closure, is unchanged, while the closed
/// braid diagram gains the bands its Seifert surface needs to be connected.
inline BraidWord stabilize_missing_generators(const BraidWord& b) {
    std::vector<bool> present(static_cast<std::size_t>(b.strands()), false);
    for (const Letter& l : b.letters()) present[static_cast<std::size_t>(l.index)] = true;
    BraidWord out = b;
    for (int i = 1; i < b.strands(); ++i) {
        if (present[static_cast<std::size_t>(i)]) continue;
        out.push_back({i, 1});
        out.push_back({i, -1});
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const BraidWord& b) {
    return os << "B" << b.strands() << "[" << b.to_string() << "]";
}

} // namespace cablekit

#endif // CABLEKIT_BRAID_HPP
