#include "pellcf/rational.hpp"

#include <cstdlib>

namespace pellcf {

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

std::optional<Rat> parse_plain(const std::string& text) {
  if (text.empty()) return std::nullopt;
  mpq_t v;
  mpq_init(v);
  if (mpq_set_str(v, text.c_str(), 10) != 0) {
    mpq_clear(v);
    return std::nullopt;
  }
  if (mpz_sgn(mpq_denref(v)) == 0) {
    mpq_clear(v);
    return std::nullopt;
  }
  mpq_canonicalize(v);
  Rat out(v);
  mpq_clear(v);
  return out;
}

}  // namespace

std::optional<Rat> rat_parse(const std::string& text) {
  auto caret = text.find('^');
  if (caret == std::string::npos) return parse_plain(text);
  auto base = parse_plain(text.substr(0, caret));
  if (!base) return std::nullopt;
  const std::string exp_str = text.substr(caret + 1);
  if (exp_str.empty()) return std::nullopt;
  errno = 0;
  char* end = nullptr;
  long e = std::strtol(exp_str.c_str(), &end, 10);
  if (errno != 0 || end == nullptr || *end != '\0') return std::nullopt;
  if (*base == 0 && e < 0) return std::nullopt;
  bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
  Rat num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base->get_num_mpz_t(), k);
  mpz_pow_ui(num.get_den_mpz_t(), base->get_den_mpz_t(), k);
  num.canonicalize();
  if (invert) {
    if (num == 0) return std::nullopt;
    num = 1 / num;
  }
  return num;
}

Rat rat_pow2(long k) {
  Rat r;
  if (k >= 0) {
    mpz_ui_pow_ui(r.get_num_mpz_t(), 2, static_cast<unsigned long>(k));
  } else {
    mpz_ui_pow_ui(r.get_den_mpz_t(), 2, static_cast<unsigned long>(-k));
  }
  r.canonicalize();
  return r;
}

bool rat_is_square(const Rat& r, Rat* root) {
  if (sgn(r) < 0) return false;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return false;
  if (root != nullptr) {
    Rat s;
    mpz_sqrt(s.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(s.get_den_mpz_t(), r.get_den_mpz_t());
    s.canonicalize();
    *root = s;
  }
  return true;
}

}  // namespace pellcf
