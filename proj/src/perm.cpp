#include "loewy/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace loewy {

Perm::Perm(std::vector<Pt> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Pt p : img_) {
    if (p >= img_.size() || seen[p])
      throw std::invalid_argument("Perm: image array is not a bijection");
    seen[p] = 1;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Pt> v(degree);
  std::iota(v.begin(), v.end(), Pt(0));
  Perm p;
  p.img_ = std::move(v);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& then) const {
  if (degree() != then.degree()) throw std::invalid_argument("Perm: degree mismatch in composition");
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[i] = then.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(degree());
  for (std::size_t i = 0; i < degree(); ++i) r.img_[img_[i]] = Pt(i);
  return r;
}

Perm Perm::conjugate(const Perm& g) const {
  return g.inverse().compose(*this).compose(g);
}

std::uint64_t Perm::order() const {
  // lcm of cycle lengths
  std::vector<char> seen(degree(), 0);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycle_string() const {
  std::vector<char> seen(degree(), 0);
  std::string s;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = 1;
      continue;
    }
    s += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) s += ',';
      s += std::to_string(j + 1);
      first = false;
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

namespace {

void skip_ws(std::string_view t, std::size_t& i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t')) ++i;
}

std::uint64_t parse_point(std::string_view t, std::size_t& i) {
  skip_ws(t, i);
  if (i >= t.size() || t[i] < '0' || t[i] > '9')
    throw std::invalid_argument("Perm: expected point number at position " + std::to_string(i));
  std::uint64_t v = 0;
  while (i < t.size() && t[i] >= '0' && t[i] <= '9') {
    v = v * 10 + (t[i] - '0');
    if (v > 1u << 20) throw std::invalid_argument("Perm: point out of range");
    ++i;
  }
  return v;
}

} // namespace

Perm Perm::parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Pt> img(degree);
  std::iota(img.begin(), img.end(), Pt(0));
  std::size_t i = 0;
  skip_ws(text, i);
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("Perm: expected '(' at position " + std::to_string(i));
    ++i;
    skip_ws(text, i);
    std::vector<Pt> cyc;
    while (i < text.size() && text[i] != ')') {
      std::uint64_t pt = parse_point(text, i);
      if (pt == 0 || pt > degree)
        throw std::invalid_argument("Perm: point " + std::to_string(pt) + " outside degree " + std::to_string(degree));
      cyc.push_back(Pt(pt - 1));
      skip_ws(text, i);
      if (i < text.size() && (text[i] == ',' || text[i] == ' ')) {
        ++i;
        skip_ws(text, i);
      }
    }
    if (i >= text.size()) throw std::invalid_argument("Perm: unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) {
      if (img[cyc[k]] != cyc[k])
        throw std::invalid_argument("Perm: point repeated across cycles");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      Pt from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (cyc.size() > 1 && img[from] != from)
        throw std::invalid_argument("Perm: point repeated across cycles");
      img[from] = to;
    }
    skip_ws(text, i);
  }
  return Perm(std::move(img));
}

Perm parse_image_list(std::string_view text, std::size_t degree) {
  std::size_t i = 0;
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '[')
    throw std::invalid_argument("Perm: expected '[' in image list");
  ++i;
  std::vector<Perm::Pt> img;
  while (i < text.size() && text[i] != ']') {
    std::uint64_t pt = parse_point(text, i);
    if (pt == 0 || pt > degree)
      throw std::invalid_argument("Perm: image " + std::to_string(pt) + " outside degree " + std::to_string(degree));
    img.push_back(Perm::Pt(pt - 1));
    skip_ws(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      skip_ws(text, i);
    }
  }
  if (i >= text.size()) throw std::invalid_argument("Perm: unterminated image list");
  if (img.size() != degree) throw std::invalid_argument("Perm: image list length differs from degree");
  return Perm(std::move(img));
}

Perm perm_pow(const Perm& p, std::uint64_t n) {
  Perm r = Perm::identity(p.degree());
  Perm base = p;
  while (n) {
    if (n & 1) r = r.compose(base);
    base = base.compose(base);
    n >>= 1;
  }
  return r;
}

} // namespace loewy
