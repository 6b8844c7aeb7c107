#include "logfano/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace logfano {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto check_integer = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!check_integer(num_part, true) || !check_integer(den_part, false))
    throw std::invalid_argument("malformed rational literal: " + text);
  // mpz_set_str rejects a leading '+'.
  Int num(num_part[0] == '+' ? num_part.substr(1) : num_part), den(den_part);
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

long RatSampler::next_int(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("sampler range inverted");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng_() % span);
}

Rat RatSampler::next_rational(long max_num, long max_den, bool nonzero) {
  for (;;) {
    const long num = next_int(-max_num, max_num);
    const long den = next_int(1, max_den);
    if (nonzero && num == 0) continue;
    return make_rat(num, den);
  }
}

Rat RatSampler::next_positive(long max_num, long max_den) {
  return make_rat(next_int(1, max_num), next_int(1, max_den));
}

std::uint64_t resolve_seed(const std::uint64_t* explicit_seed) {
  if (explicit_seed != nullptr) return *explicit_seed;
  if (const char* env = std::getenv("LOGFANO_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return static_cast<std::uint64_t>(v);
    throw std::invalid_argument("LOGFANO_SEED is not an unsigned integer");
  }
  return kDefaultSeed;
}

}  // namespace logfano
