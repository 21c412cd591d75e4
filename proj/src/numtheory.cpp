#include "fme/numtheory.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "fme/errors.hpp"

namespace fme {

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

FactoredModulus FactoredModulus::from_factors(std::vector<PrimePower> factors,
                                              bool trust_factors) {
  if (factors.empty()) throw InvalidFactorization("factorization has no prime factors");
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });

  FactoredModulus fm;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, e] = factors[i];
    if (e == 0) throw InvalidFactorization("exponent 0 for prime " + to_decimal(p));
    if (i > 0 && factors[i - 1].prime == p) {
      throw InvalidFactorization("duplicate prime " + to_decimal(p));
    }
    if (p < 2 || (!trust_factors && !is_prime(p))) {
      throw InvalidFactorization(to_decimal(p) + " is not prime");
    }
    Natural pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    fm.value_ *= pe;
    fm.primes_.push_back(p);
    fm.exponents_.push_back(e);
  }
  return fm;
}

std::uint32_t FactoredModulus::max_exponent() const {
  return *std::max_element(exponents_.begin(), exponents_.end());
}

std::string FactoredModulus::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += '*';
    out += to_decimal(primes_[i]);
    if (exponents_[i] != 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out;
}

FactoredModulus parse_factored_modulus(std::string_view text, bool trust_factors) {
  if (text.empty()) throw ParseError("empty factorization");
  std::vector<PrimePower> factors;
  std::size_t pos = 0;
  while (true) {
    std::size_t star = text.find('*', pos);
    std::string_view term = text.substr(pos, star == std::string_view::npos ? text.npos : star - pos);
    std::size_t caret = term.find('^');
    PrimePower pp;
    if (caret == std::string_view::npos) {
      pp.prime = parse_natural(term);
    } else {
      pp.prime = parse_natural(term.substr(0, caret));
      pp.exponent = parse_u32(term.substr(caret + 1), "exponent");
    }
    factors.push_back(std::move(pp));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return FactoredModulus::from_factors(std::move(factors), trust_factors);
}

ParameterVector::ParameterVector(const FactoredModulus& fm, std::vector<std::uint32_t> t)
    : t_(std::move(t)), sub_modulus_(1), phi_(1) {
  check_against(fm);
  for (std::size_t i = 0; i < t_.size(); ++i) {
    const Natural& p = fm.primes()[i];
    Natural head;
    mpz_pow_ui(head.get_mpz_t(), p.get_mpz_t(), t_[i] - 1);
    sub_modulus_ *= head * p;
    phi_ *= head * (p - 1);
  }
}

ParameterVector ParameterVector::all_ones(const FactoredModulus& fm) {
  return ParameterVector(fm, std::vector<std::uint32_t>(fm.size(), 1));
}

void ParameterVector::check_against(const FactoredModulus& fm) const {
  if (t_.size() != fm.size()) {
    throw ParameterOutOfRange("parameter vector has " + std::to_string(t_.size()) +
                              " entries but the modulus has " +
                              std::to_string(fm.size()) + " primes");
  }
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (t_[i] < 1 || t_[i] > fm.exponents()[i]) {
      throw ParameterOutOfRange("t[" + std::to_string(i) + "] = " + std::to_string(t_[i]) +
                                " outside [1, " + std::to_string(fm.exponents()[i]) + "]");
    }
  }
  // Built for another modulus with the same shape.
  if (sub_modulus_ > 1 && fm.value() % sub_modulus_ != 0) {
    throw ParameterOutOfRange("parameter vector " + to_string() + " does not belong to " +
                              fm.to_string());
  }
}

std::string ParameterVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(t_[i]);
  }
  return out;
}

std::vector<std::uint32_t> parse_parameter_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    out.push_back(parse_u32(text.substr(pos, comma == text.npos ? text.npos : comma - pos),
                            "parameter"));
    if (comma == text.npos) break;
    pos = comma + 1;
  }
  return out;
}

Rational Rational::make(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::uint32_t valuation(const Natural& n, const Natural& p) {
  if (n == 0) throw DomainError("valuation of 0 is undefined");
  if (p < 2) throw DomainError("valuation base must be at least 2");
  std::uint32_t k = 0;
  Natural rest = n;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

std::uint32_t valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("valuation of 0 is undefined");
  if (p < 2) throw DomainError("valuation base must be at least 2");
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

Natural radical(const FactoredModulus& fm) {
  Natural r = 1;
  for (const auto& p : fm.primes()) r *= p;
  return r;
}

Rational height(const FactoredModulus& fm, const ParameterVector& tv) {
  tv.check_against(fm);
  Rational best = Rational::make(fm.exponents()[0], tv.t()[0]);
  for (std::size_t i = 1; i < fm.size(); ++i) {
    Rational r = Rational::make(fm.exponents()[i], tv.t()[i]);
    if (best < r) best = r;
  }
  return best;
}

std::uint64_t sieve_cap_from_env() {
  const char* raw = std::getenv("FME_SIEVE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultSieveCap;
  std::uint64_t cap = 0;
  std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (ec != std::errc() || ptr != text.data() + text.size() || cap < 2) {
    throw ParseError("FME_SIEVE_CAP must be a natural >= 2, got '" + std::string(text) + "'");
  }
  return cap;
}

std::uint32_t SpfTable::max_exponent(std::uint64_t n) const {
  std::uint32_t best = 1;
  while (n > 1) {
    std::uint32_t p = spf_[n];
    std::uint32_t k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    best = std::max(best, k);
  }
  return best;
}

SpfTable spf_sieve(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (limit > cap) {
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                        std::to_string(cap));
  }
  if (limit > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceError("sieve limit does not fit 32-bit entries");
  }
  // Linear sieve: every composite is struck exactly once by its smallest prime.
  std::vector<std::uint32_t> spf(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] == 0) {
      spf[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf[i] || i * p > limit) break;
      spf[i * p] = p;
    }
  }
  return SpfTable(std::move(spf));
}

double niven_average(std::uint64_t limit, std::uint64_t cap) {
  SpfTable table = spf_sieve(limit, cap);
  std::uint64_t total = 1;  // H(1)
  for (std::uint64_t k = 2; k <= limit; ++k) total += table.max_exponent(k);
  return static_cast<double>(total) / static_cast<double>(limit);
}

}  // namespace fme
