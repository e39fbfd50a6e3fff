#include "qsphere/ncpoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace qsphere {

GenId Alphabet::add(const std::string& display, const std::string& star_display) {
    if (by_name_.count(display)) throw std::invalid_argument("duplicate generator " + display);
    GenId id = static_cast<GenId>(gens_.size());
    gens_.push_back({display, id});
    by_name_[display] = id;
    if (!star_display.empty()) {
        GenId sid = static_cast<GenId>(gens_.size());
        gens_.push_back({star_display, id});
        by_name_[star_display] = sid;
        gens_[id].star_partner = sid;
    }
    return id;
}

void Alphabet::set_star(const std::string& a, const std::string& b) {
    GenId ia = id(a), ib = id(b);
    gens_[ia].star_partner = ib;
    gens_[ib].star_partner = ia;
}

GenId Alphabet::id(const std::string& display) const {
    auto it = by_name_.find(display);
    if (it == by_name_.end()) throw std::invalid_argument("unknown generator " + display);
    return it->second;
}

bool Alphabet::has(const std::string& display) const { return by_name_.count(display) != 0; }

LaurentQ NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentQ() : it->second;
}

void NCPoly::add_term(const Word& w, const LaurentQ& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    r += o;
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    r -= o;
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::operator*(const LaurentQ& c) const {
    NCPoly r;
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
    return r;
}

NCPoly NCPoly::specialize(const Rational& q0) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, LaurentQ(c.eval(q0)));
    return r;
}

std::string NCPoly::str(const Alphabet& alpha) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << " + ";
        first = false;
        bool simple = cs.find(' ') == std::string::npos && cs.find('+') == std::string::npos;
        if (w.empty()) {
            os << (simple ? cs : "(" + cs + ")");
            continue;
        }
        if (!c.is_one()) os << (simple ? cs : "(" + cs + ")") << " ";
        os << word_str(w, alpha);
    }
    return os.str();
}

NCPoly star(const NCPoly& p, const Alphabet& alpha) {
    NCPoly r;
    for (const auto& [w, c] : p.terms()) {
        Word sw(w.rbegin(), w.rend());
        for (GenId& g : sw) g = alpha.star(g);
        r.add_term(sw, c);  // q is real: coefficients are fixed by conjugation
    }
    return r;
}

std::string word_str(const Word& w, const Alphabet& alpha) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << alpha.gen(w[i]).display;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

bool RewriteSystem::word_less(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void RewriteSystem::add_rule(Word lhs, NCPoly rhs) {
    for (const auto& [w, c] : rhs.terms())
        if (!word_less(w, lhs))
            throw std::invalid_argument("rule violates monomial order: " + word_str(lhs, alpha_) +
                                        " -> " + rhs.str(alpha_));
    {
        std::lock_guard<std::mutex> lk(*cache_mu_);
        cache_.clear();
    }
    rules_.push_back({std::move(lhs), std::move(rhs)});
}

namespace {

// Exact division of every coefficient of p by d (a LaurentQ); nullopt if any
// coefficient is not divisible.
std::optional<LaurentQ> divide_coeff(const LaurentQ& c, const LaurentQ& d) {
    // c / d as a Laurent polynomial if the remainder is zero.
    LaurentQ rem = c, quot;
    const long dmax = d.max_exp();
    const Rational dl = d.leading_coeff();
    while (!rem.is_zero()) {
        long sh = rem.max_exp() - dmax;
        Rational f = rem.leading_coeff() / dl;
        quot.add_term(sh, f);
        for (const auto& [e, k] : d.terms()) rem.add_term(e + sh, -f * k);
        if (!rem.is_zero() && rem.max_exp() - dmax >= sh) return std::nullopt;  // no progress
    }
    return quot;
}

}  // namespace

void RewriteSystem::add_relation(const NCPoly& p0) {
    NCPoly p = nf(p0);
    if (p.is_zero()) return;
    // remove content (gcd of coefficients) so the leading coefficient is as
    // small as possible before inverting it
    LaurentQ content;
    for (const auto& [w, c] : p.terms()) content = laurent_gcd(content, c);
    if (!content.is_one() && !content.is_zero()) {
        NCPoly reduced;
        for (const auto& [w, c] : p.terms()) {
            auto qd = divide_coeff(c, content);
            if (!qd) throw std::logic_error("content division failed");
            reduced.add_term(w, *qd);
        }
        p = reduced;
    }
    Word lead;
    bool have = false;
    for (const auto& [w, c] : p.terms())
        if (!have || word_less(lead, w)) {
            lead = w;
            have = true;
        }
    LaurentQ lc = p.coeff(lead);
    NCPoly rhs;
    for (const auto& [w, c] : p.terms()) {
        if (w == lead) continue;
        auto qd = divide_coeff(-c, lc);
        if (!qd)
            throw std::logic_error("cannot orient relation (leading coefficient " + lc.str() +
                                   " is not a unit for the remaining terms): " + p.str(alpha_));
        rhs.add_term(w, *qd);
    }
    add_rule(lead, rhs);
}

bool RewriteSystem::find_leftmost_match(const Word& w, Match* m) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t r = 0; r < rules_.size(); ++r) {
            const Word& lhs = rules_[r].lhs;
            if (lhs.size() > w.size() - pos) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) {
                m->pos = pos;
                m->rule = r;
                return true;
            }
        }
    }
    return false;
}

NCPoly RewriteSystem::reduce_word(const Word& w, size_t* steps) const {
    {
        std::lock_guard<std::mutex> lk(*cache_mu_);
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
    }
    Match m;
    if (!find_leftmost_match(w, &m)) return NCPoly(w);
    if (++*steps > step_limit_)
        throw StepLimitExceeded("step limit " + std::to_string(step_limit_) +
                                " exceeded reducing " + word_str(w, alpha_));
    const RewriteRule& rule = rules_[m.rule];
    NCPoly acc;
    for (const auto& [t, c] : rule.rhs.terms()) {
        Word nw(w.begin(), w.begin() + m.pos);
        nw.insert(nw.end(), t.begin(), t.end());
        nw.insert(nw.end(), w.begin() + m.pos + rule.lhs.size(), w.end());
        acc += reduce_word(nw, steps) * c;
    }
    {
        std::lock_guard<std::mutex> lk(*cache_mu_);
        cache_.emplace(w, acc);
    }
    return acc;
}

NCPoly RewriteSystem::nf_word(const Word& w) const {
    size_t steps = 0;
    return reduce_word(w, &steps);
}

NCPoly RewriteSystem::nf(const NCPoly& p) const {
    size_t steps = 0;
    NCPoly acc;
    for (const auto& [w, c] : p.terms()) acc += reduce_word(w, &steps) * c;
    return acc;
}

bool RewriteSystem::is_irreducible(const Word& w) const {
    Match m;
    return !find_leftmost_match(w, &m);
}

std::vector<Ambiguity> RewriteSystem::overlaps() const {
    std::vector<Ambiguity> out;
    for (size_t i = 0; i < rules_.size(); ++i) {
        const Word& a = rules_[i].lhs;
        for (size_t j = 0; j < rules_.size(); ++j) {
            const Word& b = rules_[j].lhs;
            // overlap ambiguities: proper suffix of a = proper prefix of b
            size_t kmax = std::min(a.size(), b.size()) - 1;
            for (size_t k = 1; k <= kmax; ++k) {
                if (!std::equal(a.end() - k, a.end(), b.begin())) continue;
                Word w = a;
                w.insert(w.end(), b.begin() + k, b.end());
                // via rule i at position 0:
                NCPoly tail(Word(b.begin() + k, b.end()));
                NCPoly via_a = rules_[i].rhs * tail;
                // via rule j at position |a|-k:
                NCPoly head(Word(a.begin(), a.end() - k));
                NCPoly via_b = head * rules_[j].rhs;
                NCPoly obst = nf(via_a - via_b);
                out.push_back({i, j, std::move(w), std::move(obst)});
            }
            // inclusion ambiguities: b a proper subword of a
            if (i != j && b.size() < a.size()) {
                for (size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                    if (!std::equal(b.begin(), b.end(), a.begin() + pos)) continue;
                    NCPoly head(Word(a.begin(), a.begin() + pos));
                    NCPoly tail(Word(a.begin() + pos + b.size(), a.end()));
                    NCPoly via_b = head * rules_[j].rhs * tail;
                    NCPoly obst = nf(rules_[i].rhs - via_b);
                    out.push_back({i, j, a, std::move(obst)});
                }
            }
        }
    }
    return out;
}

void RewriteSystem::complete(size_t max_rules) {
    for (;;) {
        bool added = false;
        for (const Ambiguity& amb : overlaps()) {
            NCPoly p = nf(amb.obstruction);
            if (p.is_zero()) continue;
            add_relation(p);
            added = true;
            if (rules_.size() > max_rules)
                throw CompletionDiverged("completion exceeded " + std::to_string(max_rules) +
                                         " rules");
        }
        if (!added) return;
    }
}

bool RewriteSystem::is_confluent() const {
    for (const Ambiguity& amb : overlaps())
        if (!amb.obstruction.is_zero()) return false;
    return true;
}

std::vector<Word> RewriteSystem::irreducible_words(size_t d) const {
    std::vector<Word> cur{Word{}};
    for (size_t len = 1; len <= d; ++len) {
        std::vector<Word> next;
        for (const Word& w : cur)
            for (size_t g = 0; g < alpha_.size(); ++g) {
                Word e = w;
                e.push_back(static_cast<GenId>(g));
                // only suffixes ending at the new letter need checking
                bool ok = true;
                for (const RewriteRule& r : rules_) {
                    if (r.lhs.size() > e.size()) continue;
                    if (std::equal(r.lhs.begin(), r.lhs.end(), e.end() - r.lhs.size())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next.push_back(std::move(e));
            }
        cur = std::move(next);
    }
    return cur;
}

std::vector<Word> RewriteSystem::irreducible_words_upto(size_t d) const {
    std::vector<Word> out{Word{}};
    std::vector<Word> cur{Word{}};
    for (size_t len = 1; len <= d; ++len) {
        std::vector<Word> next;
        for (const Word& w : cur)
            for (size_t g = 0; g < alpha_.size(); ++g) {
                Word e = w;
                e.push_back(static_cast<GenId>(g));
                bool ok = true;
                for (const RewriteRule& r : rules_) {
                    if (r.lhs.size() > e.size()) continue;
                    if (std::equal(r.lhs.begin(), r.lhs.end(), e.end() - r.lhs.size())) {
                        ok = false;
                        break;
                    }
                }
                if (ok) next.push_back(std::move(e));
            }
        for (const Word& w : next) out.push_back(w);
        cur = std::move(next);
    }
    return out;
}

}  // namespace qsphere
