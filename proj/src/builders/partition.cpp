#include "mckay/builders.hpp"

#include <numeric>

namespace mckay {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    n_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<unsigned> out;
  if (parts_.empty()) return Partition(out);
  for (unsigned col = 0; col < parts_.front(); ++col) {
    unsigned height = 0;
    while (height < parts_.size() && parts_[height] > col) ++height;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

std::vector<unsigned> Partition::diagonal_hooks() const {
  const Partition t = conjugate();
  std::vector<unsigned> out;
  for (unsigned i = 0; i < parts_.size() && parts_[i] > i; ++i)
    out.push_back((parts_[i] - i - 1) + (t.parts_[i] - i - 1) + 1);
  return out;
}

std::vector<unsigned> Partition::multiplicities() const {
  std::vector<unsigned> m(n_ + 1, 0);
  for (unsigned p : parts_) ++m[p];
  return m;
}

int Partition::sign() const {
  unsigned even = 0;
  for (unsigned p : parts_)
    if (p % 2 == 0) ++even;
  return even % 2 == 0 ? 1 : -1;
}

Integer Partition::centralizer_order() const {
  Integer z = 1;
  const auto m = multiplicities();
  for (unsigned i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    z *= ipow(Integer(i), m[i]);
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), m[i]);
    z *= f;
  }
  return z;
}

std::uint64_t Partition::lcm() const {
  std::uint64_t out = 1;
  for (unsigned p : parts_) out = std::lcm<std::uint64_t>(out, p);
  return out;
}

std::string Partition::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out + ")";
}

std::string Partition::compact_label() const {
  std::string out = "(";
  std::size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) out += ",";
    first = false;
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

std::vector<Partition> partitions(unsigned n) {
  if (n == 0) throw DomainError("partitions: n must be positive");
  std::vector<Partition> out;
  std::vector<unsigned> current;
  // Depth-first, largest next part first, yields descending lexicographic order.
  auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace mckay
