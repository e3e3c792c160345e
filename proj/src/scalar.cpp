#include "qaffine/scalar.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace qaffine {

SpectralScalar SpectralScalar::q_pow(int num, int den)
{
    if (den == 0 || (kQDenominator * num) % den != 0)
        throw RootOutsideDomain("q-exponent " + std::to_string(num) + "/" + std::to_string(den) +
                                " needs a denominator beyond 6");
    return {0, kQDenominator * num / den};
}

std::string SpectralScalar::to_string() const
{
    if (is_one())
        return "1";
    std::string out;
    if (phase_ != 0)
        out = "z24^" + std::to_string(phase_);
    if (q6_ != 0) {
        if (!out.empty())
            out += '*';
        int g = std::gcd(q6_, kQDenominator);
        int num = q6_ / g, den = kQDenominator / g;
        if (den == 1)
            out += "q^" + std::to_string(num);
        else
            out += "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, SpectralScalar s) { return os << s.to_string(); }

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : s_(text) {}

    SpectralScalar parse()
    {
        skip_ws();
        if (pos_ == s_.size())
            fail("empty scalar literal");
        SpectralScalar acc = factor();
        skip_ws();
        while (pos_ < s_.size() && s_[pos_] == '*') {
            ++pos_;
            acc *= factor();
            skip_ws();
        }
        if (pos_ != s_.size())
            fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return acc;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(std::string_view tok)
    {
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    bool at_word_end() const
    {
        return pos_ >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_');
    }

    int integer()
    {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    // exp := INT | '(' INT '/' INT ')' ; returns num/den
    std::pair<int, int> exponent()
    {
        if (eat("(")) {
            int num = integer();
            int den = 1;
            if (eat("/"))
                den = integer();
            if (!eat(")"))
                fail("expected ')'");
            if (den == 0)
                fail("zero denominator");
            return {num, den};
        }
        return {integer(), 1};
    }

    SpectralScalar powered(SpectralScalar base)
    {
        if (!eat("^"))
            return base;
        std::size_t at = pos_;
        auto [num, den] = exponent();
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if ((base.phase() * num) % den != 0 || (base.q6() * num) % den != 0) {
            pos_ = at;
            fail("exponent leaves the scalar domain");
        }
        return {base.phase() * num / den, base.q6() * num / den};
    }

    SpectralScalar factor()
    {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '1')) {
            neg = true;
            ++pos_;
        }
        SpectralScalar f = atom();
        return neg ? -f : f;
    }

    SpectralScalar atom()
    {
        if (eat("-1"))
            return SpectralScalar::minus_one();
        if (eat("1") && at_word_end())
            return SpectralScalar::one();
        if (eat("z24^")) {
            return SpectralScalar::zeta(integer());
        }
        if (eat("(-q")) {
            SpectralScalar b = powered(q_base());
            if (!eat(")"))
                fail("expected ')'");
            return powered(-b);
        }
        if (eat("(")) {
            SpectralScalar inner = ScalarParser::sub_product(*this);
            if (!eat(")"))
                fail("expected ')'");
            return powered(inner);
        }
        if (eat("omega") || eat("w")) {
            if (eat("2"))
                return SpectralScalar::omega().pow(2);
            return powered(SpectralScalar::omega());
        }
        if (eat("i") && at_word_end())
            return powered(SpectralScalar::sqrt_minus_one());
        if (eat("q"))
            return powered(q_base());
        fail("unknown factor");
    }

    // after a consumed 'q': optional s/t suffix
    SpectralScalar q_base()
    {
        if (eat("_s") || eat("s"))
            return SpectralScalar::q_s();
        if (eat("_t") || eat("t"))
            return SpectralScalar::q_t();
        return SpectralScalar::q();
    }

    static SpectralScalar sub_product(ScalarParser& p)
    {
        SpectralScalar acc = p.factor();
        p.skip_ws();
        while (p.pos_ < p.s_.size() && p.s_[p.pos_] == '*') {
            ++p.pos_;
            acc *= p.factor();
            p.skip_ws();
        }
        return acc;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

SpectralScalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::vector<SpectralScalar> nth_roots(SpectralScalar s, int n)
{
    if (n != 2 && n != 3)
        throw RootOutsideDomain("only square and cube roots are supported");
    int g = std::gcd(n, SpectralScalar::kPhaseModulus);
    if (s.phase() % g != 0 || s.q6() % n != 0)
        throw RootOutsideDomain("root of " + s.to_string() + " of order " + std::to_string(n) +
                                " leaves the scalar domain");
    std::vector<SpectralScalar> roots;
    int step = SpectralScalar::kPhaseModulus / n;
    for (int k = 0; k < n; ++k)
        roots.emplace_back(s.phase() / n + step * k, s.q6() / n);
    return roots;
}

}  // namespace qaffine
