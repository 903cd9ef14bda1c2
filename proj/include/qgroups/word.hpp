#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qg {

struct word_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered list of generator labels.  `involutive` means every generator is
// declared an involution, so inverses equal the generators themselves and
// free reduction also cancels adjacent equal letters.
//
// An Alphabet is a cheap handle to immutable shared data, so Words can carry
// their alphabet by value.
class Alphabet {
    struct Data {
        std::vector<std::string> names;
        bool involutive = true;
        std::unordered_map<std::string, int> index;
    };

public:
    Alphabet() : d_(empty_data()) {}
    Alphabet(std::vector<std::string> names, bool involutive = true) {
        auto d = std::make_shared<Data>();
        d->names = std::move(names);
        d->involutive = involutive;
        for (int i = 0; i < static_cast<int>(d->names.size()); ++i) {
            if (!d->index.emplace(d->names[static_cast<std::size_t>(i)], i).second)
                throw word_error("Alphabet: duplicate label '" + d->names[static_cast<std::size_t>(i)] + "'");
        }
        d_ = std::move(d);
    }
    Alphabet(std::initializer_list<const char*> names, bool involutive = true)
        : Alphabet(std::vector<std::string>(names.begin(), names.end()), involutive) {}

    int size() const { return static_cast<int>(d_->names.size()); }
    bool involutive() const { return d_->involutive; }
    const std::string& name(int i) const { return d_->names.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& names() const { return d_->names; }

    int find(std::string_view label) const {
        auto it = d_->index.find(std::string(label));
        return it == d_->index.end() ? -1 : it->second;
    }

    // Longest label that is a prefix of text, or -1.
    int longest_prefix(std::string_view text) const {
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < size(); ++i) {
            const std::string& n = d_->names[static_cast<std::size_t>(i)];
            if (n.size() > best_len && text.size() >= n.size() &&
                text.substr(0, n.size()) == n) {
                best = i;
                best_len = n.size();
            }
        }
        return best;
    }

    bool operator==(const Alphabet& o) const {
        return d_ == o.d_ ||
               (d_->names == o.d_->names && d_->involutive == o.d_->involutive);
    }

private:
    static std::shared_ptr<const Data> empty_data() {
        static const std::shared_ptr<const Data> e = std::make_shared<Data>();
        return e;
    }
    std::shared_ptr<const Data> d_;
};

struct Letter {
    std::int16_t gen;
    std::int16_t sign; // +1 or -1; always +1 under an involutive alphabet
    bool operator==(const Letter&) const = default;
};

// Freely reduced word over an Alphabet.  All constructors and operations
// reduce their result, so adjacent inverse pairs (and, under an involutive
// alphabet, adjacent equal letters) never survive.
class Word {
public:
    Word() = default;
    explicit Word(Alphabet a) : alpha_(std::move(a)) {}
    Word(Alphabet a, std::vector<Letter> letters) : alpha_(std::move(a)), ls_(std::move(letters)) {
        reduce_in_place();
    }

    const Alphabet& alphabet() const { return alpha_; }
    bool empty() const { return ls_.empty(); }
    std::size_t size() const { return ls_.size(); }
    const std::vector<Letter>& letters() const { return ls_; }
    const Letter& operator[](std::size_t i) const { return ls_[i]; }
    bool operator==(const Word& o) const { return ls_ == o.ls_; }

    Word inverse() const {
        Word r(alpha_);
        r.ls_.reserve(ls_.size());
        for (std::size_t i = ls_.size(); i-- > 0;) {
            Letter l = ls_[i];
            if (!alpha_.involutive()) l.sign = static_cast<std::int16_t>(-l.sign);
            r.ls_.push_back(l);
        }
        // a reduced word's inverse is reduced
        return r;
    }

    Word operator*(const Word& o) const {
        check_same(o);
        Word r(alpha_);
        r.ls_ = ls_;
        r.ls_.insert(r.ls_.end(), o.ls_.begin(), o.ls_.end());
        r.reduce_in_place();
        return r;
    }

    // x^w = w^-1 x w
    Word conjugated_by(const Word& w) const {
        check_same(w);
        return w.inverse() * (*this) * w;
    }

    Word pow(long long n) const {
        Word base = n < 0 ? inverse() : *this;
        if (n < 0) n = -n;
        Word r(alpha_);
        for (long long i = 0; i < n; ++i) r = r * base;
        return r;
    }

    static Word commutator(const Word& x, const Word& y) {
        x.check_same(y);
        return x.inverse() * y.inverse() * x * y;
    }

    std::string str() const {
        std::string out;
        for (const Letter& l : ls_) {
            out += alpha_.name(l.gen);
            if (l.sign < 0) out += "^-1";
        }
        return out;
    }

private:
    void check_same(const Word& o) const {
        if (!(alpha_ == o.alpha_)) throw word_error("Word: alphabet mismatch");
    }

    void reduce_in_place() {
        std::vector<Letter> out;
        out.reserve(ls_.size());
        const bool inv = alpha_.involutive();
        for (Letter l : ls_) {
            if (inv) l.sign = 1;
            if (!out.empty() && out.back().gen == l.gen &&
                (inv || out.back().sign == -l.sign)) {
                out.pop_back();
            } else {
                out.push_back(l);
            }
        }
        ls_ = std::move(out);
    }

    Alphabet alpha_;
    std::vector<Letter> ls_;
};

inline Word free_reduce(const Word& w) { return w; } // Words are kept reduced
inline Word inverse(const Word& w) { return w.inverse(); }
inline Word conjugate(const Word& x, const Word& w) { return x.conjugated_by(w); }
inline Word power(const Word& w, long long n) { return w.pow(n); }
inline Word commutator(const Word& x, const Word& y) { return Word::commutator(x, y); }

// ---------------------------------------------------------------------------
// Parser.  Grammar (whitespace and '.' separate factors, otherwise ignored):
//
//   expr    := factor*
//   factor  := primary ( '^' '{' expr '}' | '^' INT )*
//   primary := LABEL | '(' expr ')' | '[' expr ',' expr ']'
//
// '^{w}' is conjugation (w^-1 x w), '^n' an integer power, '[x,y]' the
// commutator x^-1 y^-1 x y.  Labels are matched greedily (longest first), so
// a' is one letter and adbecf is six.
// ---------------------------------------------------------------------------
class WordParser {
public:
    explicit WordParser(const Alphabet& a) : alpha_(a) {}

    Word parse(std::string_view text) {
        text_ = text;
        pos_ = 0;
        Word w = parse_expr();
        skip_sep();
        if (pos_ != text_.size())
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return w;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw word_error("parse error at position " + std::to_string(pos_) + ": " + msg +
                         " in \"" + std::string(text_) + "\"");
    }

    void skip_sep() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '.'))
            ++pos_;
    }

    bool at_end_or_closer() {
        if (pos_ >= text_.size()) return true;
        char c = text_[pos_];
        return c == ')' || c == ']' || c == '}' || c == ',';
    }

    Word parse_expr() {
        Word w(alpha_);
        for (;;) {
            skip_sep();
            if (at_end_or_closer()) return w;
            w = w * parse_factor();
        }
    }

    Word parse_factor() {
        Word w = parse_primary();
        for (;;) {
            skip_sep();
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                skip_sep();
                if (pos_ >= text_.size()) fail("dangling '^'");
                if (text_[pos_] == '{') {
                    ++pos_;
                    Word exp = parse_expr();
                    expect('}');
                    w = w.conjugated_by(exp);
                } else {
                    w = w.pow(parse_int());
                }
            } else {
                return w;
            }
        }
    }

    Word parse_primary() {
        skip_sep();
        if (pos_ >= text_.size()) fail("expected a word");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Word w = parse_expr();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word x = parse_expr();
            expect(',');
            Word y = parse_expr();
            expect(']');
            return Word::commutator(x, y);
        }
        if (c == '^') fail("exponent applied to nothing");
        int g = alpha_.longest_prefix(text_.substr(pos_));
        if (g < 0) fail("unknown label starting at '" + std::string(1, c) + "'");
        pos_ += alpha_.name(g).size();
        return Word(alpha_, {Letter{static_cast<std::int16_t>(g), 1}});
    }

    long long parse_int() {
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
            fail("expected integer exponent");
        long long v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return neg ? -v : v;
    }

    void expect(char c) {
        skip_sep();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    const Alphabet& alpha_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Word parse_word(std::string_view text, const Alphabet& a) {
    return WordParser(a).parse(text);
}

} // namespace qg
