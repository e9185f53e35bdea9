#include <cfree/scalar.hpp>

#include <ostream>
#include <stdexcept>

namespace cfree {

namespace {

mpq_class parse_rational(std::string_view text)
{
    std::string s(text);
    // mpq_class accepts leading '+' inconsistently; normalise it away.
    if (!s.empty() && s.front() == '+') {
        s.erase(0, 1);
    }
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
    }
    q.canonicalize();
    return q;
}

} // namespace

ComplexRational::ComplexRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

ComplexRational ComplexRational::parse(std::string_view re, std::string_view im)
{
    return {parse_rational(re), parse_rational(im)};
}

ComplexRational &ComplexRational::operator+=(const ComplexRational &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexRational &ComplexRational::operator-=(const ComplexRational &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexRational &ComplexRational::operator*=(const ComplexRational &o)
{
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexRational &ComplexRational::operator/=(const ComplexRational &o)
{
    const mpq_class d = o.norm();
    if (d == 0) {
        throw std::domain_error("division by zero");
    }
    if (o.im_ == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::ostream &operator<<(std::ostream &os, const ComplexRational &x)
{
    os << x.re_.get_str();
    if (x.im_ != 0) {
        os << (x.im_ > 0 ? "+" : "-") << to_string(abs(x.im_)) << "i";
    }
    return os;
}

ComplexDouble to_complex(const ComplexRational &x) { return x.to_complex(); }

std::string to_string(const mpq_class &q) { return q.get_str(); }

} // namespace cfree
