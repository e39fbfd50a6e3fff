// Free *-algebra on a finite alphabet over LaurentQ, with the rewriting
// kernel: deglex normal forms, overlap (diamond lemma) analysis, completion.
#pragma once

#include "qsphere/scalar.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qsphere {

struct StepLimitExceeded : std::runtime_error {
    explicit StepLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct CompletionDiverged : std::runtime_error {
    explicit CompletionDiverged(const std::string& what) : std::runtime_error(what) {}
};

using GenId = std::uint8_t;

struct Generator {
    std::string display;
    GenId star_partner;  // may equal the generator's own id
};

/// Generator alphabet with precedence = index order (smaller id = smaller
/// letter in the monomial order; normal-form words sort ascending).
class Alphabet {
  public:
    GenId add(const std::string& display, const std::string& star_display = "");
    void set_star(const std::string& a, const std::string& b);

    GenId id(const std::string& display) const;
    bool has(const std::string& display) const;
    const Generator& gen(GenId g) const { return gens_[g]; }
    size_t size() const { return gens_.size(); }
    GenId star(GenId g) const { return gens_[g].star_partner; }

  private:
    std::vector<Generator> gens_;
    std::map<std::string, GenId> by_name_;
};

using Word = std::vector<GenId>;  // empty word = unit

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (GenId g : w) h = (h ^ g) * 1099511628211ull;
        return h;
    }
};

/// Finite LaurentQ-linear combination of words; canonical sparse map.
class NCPoly {
  public:
    using Terms = std::map<Word, LaurentQ>;

    NCPoly() = default;
    explicit NCPoly(const Word& w) { terms_[w] = LaurentQ(1); }
    NCPoly(const Word& w, const LaurentQ& c) {
        if (!c.is_zero()) terms_[w] = c;
    }
    static NCPoly unit() { return NCPoly(Word{}); }
    static NCPoly scalar(const LaurentQ& c) { return NCPoly(Word{}, c); }

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    LaurentQ coeff(const Word& w) const;
    LaurentQ constant_term() const { return coeff(Word{}); }

    void add_term(const Word& w, const LaurentQ& c);

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly operator*(const NCPoly& o) const;  // free concatenation product
    NCPoly operator*(const LaurentQ& c) const;
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return terms_ != o.terms_; }
    bool operator<(const NCPoly& o) const { return terms_ < o.terms_; }

    /// Specialize the deformation parameter: map every coefficient through
    /// evaluation at q0 (used to build the q=1 classical presentations).
    NCPoly specialize(const Rational& q0) const;

    std::string str(const Alphabet& alpha) const;

  private:
    Terms terms_;
};

NCPoly star(const NCPoly& p, const Alphabet& alpha);

struct RewriteRule {
    Word lhs;
    NCPoly rhs;  // every word strictly deglex-smaller than lhs
};

struct Ambiguity {
    size_t rule_a = 0, rule_b = 0;
    Word word;            // the ambiguous word
    NCPoly obstruction;   // nf(reduction via a - reduction via b)
};

/// Oriented rewriting system with degree-lexicographic order.
/// Immutable after completion; nf results are memoized per system.
class RewriteSystem {
  public:
    RewriteSystem() = default;
    explicit RewriteSystem(Alphabet alpha) : alpha_(std::move(alpha)) {}

    const Alphabet& alphabet() const { return alpha_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    /// deglex: by length, then lexicographically by generator precedence.
    bool word_less(const Word& a, const Word& b) const;

    /// Adds lhs -> rhs; throws std::invalid_argument if any rhs word is not
    /// strictly smaller than lhs (termination guard).
    void add_rule(Word lhs, NCPoly rhs);

    /// Orients p = 0 as (leading word) -> -(rest)/lead and adds it.
    void add_relation(const NCPoly& p);

    NCPoly nf(const NCPoly& p) const;
    NCPoly nf_word(const Word& w) const;
    bool is_irreducible(const Word& w) const;

    /// nf of the concatenation-bilinear product.
    NCPoly mul(const NCPoly& a, const NCPoly& b) const { return nf(a * b); }

    /// All inclusion and overlap ambiguities with their obstructions.
    std::vector<Ambiguity> overlaps() const;

    /// Knuth-Bendix/Buchberger-style completion; throws CompletionDiverged
    /// when more than max_rules rules accumulate.
    void complete(size_t max_rules = 400);

    bool is_confluent() const;

    /// All irreducible words of total degree exactly d (enumeration).
    std::vector<Word> irreducible_words(size_t d) const;
    /// All irreducible words of degree <= d, including the empty word.
    std::vector<Word> irreducible_words_upto(size_t d) const;

    size_t step_limit() const { return step_limit_; }
    void set_step_limit(size_t n) { step_limit_ = n; }

  private:
    struct Match {
        size_t pos, rule;
    };
    bool find_leftmost_match(const Word& w, Match* m) const;
    NCPoly reduce_word(const Word& w, size_t* steps) const;

    Alphabet alpha_;
    std::vector<RewriteRule> rules_;
    size_t step_limit_ = 100000;
    mutable std::unique_ptr<std::mutex> cache_mu_ = std::make_unique<std::mutex>();
    mutable std::unordered_map<Word, NCPoly, WordHash> cache_;
};

std::string word_str(const Word& w, const Alphabet& alpha);

}  // namespace qsphere
