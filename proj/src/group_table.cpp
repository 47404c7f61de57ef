#include "ultralat/group_table.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "ultralat/classical.hpp"
#include "ultralat/error.hpp"

namespace ultralat {

namespace {

[[noreturn]] void cap_exceeded(const GroupDescriptor& d, Level level, std::uint64_t cap) {
  throw Error(ErrorKind::CapExceeded,
              d.to_string() + " (" + to_string(level) + "): order exceeds cap " + std::to_string(cap));
}

unsigned bits_for(std::uint32_t q) {
  unsigned b = 0;
  while ((1u << b) < q) ++b;
  return b;
}

}  // namespace

std::uint64_t GroupTable::encode(const std::uint16_t* data) const {
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < stride(); ++i) key = (key << bits_) | data[i];
  return key;
}

void GroupTable::decode(std::uint64_t key, std::uint16_t* data) const {
  const std::uint64_t mask = (std::uint64_t{1} << bits_) - 1;
  for (std::size_t i = stride(); i-- > 0;) {
    data[i] = static_cast<std::uint16_t>(key & mask);
    key >>= bits_;
  }
}

void GroupTable::multiply(const std::uint16_t* a, const std::uint16_t* b, std::uint16_t* out) const {
  if (is_perm()) {
    for (std::size_t x = 0; x < n_; ++x) out[x] = a[b[x]];
    return;
  }
  const Field& f = *field_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Elem acc{0};
      for (std::size_t k = 0; k < n_; ++k) {
        const Elem x{a[i * n_ + k]}, y{b[k * n_ + j]};
        if (x.v != 0 && y.v != 0) acc = f.add(acc, f.mul(x, y));
      }
      out[i * n_ + j] = acc.v;
    }
}

GroupTable GroupTable::enumerate(const GroupDescriptor& d, std::uint64_t cap, Level level) {
  validate(d);
  const auto order = group_order(d, level);
  if (!order || *order > cap) cap_exceeded(d, level, cap);
  if (!d.is_alt()) return from_generators(d, level, standard_generators(d, level), cap, order);

  GroupTable t;
  t.desc_ = d;
  t.level_ = level;
  t.n_ = d.n;
  t.bits_ = 4;
  std::vector<std::vector<std::uint16_t>> gens;
  for (std::size_t i = 2; i < d.n; ++i) {
    std::vector<std::uint16_t> g(d.n);
    for (std::size_t x = 0; x < d.n; ++x) g[x] = static_cast<std::uint16_t>(x);
    // The 3-cycle (1 2 i+1).
    g[0] = 1;
    g[1] = static_cast<std::uint16_t>(i);
    g[i] = 0;
    gens.push_back(std::move(g));
  }
  std::vector<std::uint16_t> id(d.n);
  for (std::size_t x = 0; x < d.n; ++x) id[x] = static_cast<std::uint16_t>(x);

  std::unordered_set<std::uint64_t> seen{t.encode(id.data())};
  std::vector<std::uint64_t> queue{t.encode(id.data())};
  std::vector<std::uint16_t> cur(d.n), out(d.n);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    t.decode(queue[head], cur.data());
    for (const auto& g : gens) {
      t.multiply(cur.data(), g.data(), out.data());
      const auto k = t.encode(out.data());
      if (seen.insert(k).second) queue.push_back(k);
    }
  }
  if (queue.size() != *order)
    internal_fail(d.to_string() + ": closure has " + std::to_string(queue.size()) + " elements, expected " +
                  std::to_string(*order));
  std::vector<std::uint64_t> gen_keys;
  for (const auto& g : gens) gen_keys.push_back(t.encode(g.data()));
  std::sort(queue.begin(), queue.end());
  t.keys_ = std::move(queue);
  std::vector<std::size_t> gen_idx;
  for (const auto k : gen_keys) gen_idx.push_back(*t.index_of_key(k));
  t.finish(t.keys_, gen_idx);
  return t;
}

GroupTable GroupTable::from_generators(const GroupDescriptor& d, Level level, const std::vector<Matrix>& gens,
                                       std::uint64_t cap, std::optional<std::uint64_t> expected_order) {
  validate(d);
  require(!d.is_alt(), "matrix generators need a classical descriptor");
  GroupTable t;
  t.desc_ = d;
  t.level_ = level;
  t.n_ = d.n;
  t.field_ = Field::get(d.field_p(), d.field_k());
  t.bits_ = bits_for(t.field_->q());
  require(t.bits_ * t.n_ * t.n_ <= 64, d.to_string() + ": matrices too large to pack into 64-bit keys");

  const std::size_t st = t.stride();
  std::vector<std::vector<std::uint16_t>> raw;
  for (const auto& g : gens) {
    require(g.rows() == t.n_ && g.cols() == t.n_ && g.field_ptr() == t.field_, "generator shape mismatch");
    std::vector<std::uint16_t> r(st);
    for (std::size_t i = 0; i < st; ++i) r[i] = g.data()[i].v;
    raw.push_back(std::move(r));
  }
  std::vector<std::uint16_t> id(st, 0);
  for (std::size_t i = 0; i < t.n_; ++i) id[i * t.n_ + i] = 1;

  std::unordered_set<std::uint64_t> seen{t.encode(id.data())};
  std::vector<std::uint64_t> queue{t.encode(id.data())};
  std::vector<std::uint16_t> cur(st), out(st);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    t.decode(queue[head], cur.data());
    for (const auto& g : raw) {
      t.multiply(cur.data(), g.data(), out.data());
      const auto k = t.encode(out.data());
      if (seen.insert(k).second) {
        queue.push_back(k);
        if (queue.size() > cap) cap_exceeded(d, level, cap);
      }
    }
  }
  if (expected_order && queue.size() != *expected_order)
    internal_fail(d.to_string() + ": closure has " + std::to_string(queue.size()) + " elements, expected " +
                  std::to_string(*expected_order));
  std::sort(queue.begin(), queue.end());
  t.keys_ = std::move(queue);
  std::vector<std::size_t> gen_idx;
  for (const auto& g : raw) gen_idx.push_back(*t.index_of_key(t.encode(g.data())));
  t.finish(t.keys_, gen_idx);
  return t;
}

void GroupTable::finish(std::vector<std::uint64_t> keys, const std::vector<std::size_t>& gen_indices) {
  keys_ = std::move(keys);
  const std::size_t st = stride();
  data_.resize(keys_.size() * st);
  for (std::size_t i = 0; i < keys_.size(); ++i) decode(keys_[i], &data_[i * st]);

  std::vector<std::uint16_t> id(st, 0);
  if (is_perm()) {
    for (std::size_t x = 0; x < n_; ++x) id[x] = static_cast<std::uint16_t>(x);
  } else {
    for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = 1;
  }
  identity_ = *index_of_key(encode(id.data()));

  inverse_.assign(keys_.size(), 0);
  std::vector<std::uint16_t> buf(st);
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (is_perm()) {
      const std::uint16_t* p = &data_[i * st];
      for (std::size_t x = 0; x < n_; ++x) buf[p[x]] = static_cast<std::uint16_t>(x);
      inverse_[i] = *index_of_key(encode(buf.data()));
    } else {
      inverse_[i] = *index_of(ultralat::inverse(matrix(i)));
    }
  }
  compute_classes(gen_indices);
}

void GroupTable::compute_classes(const std::vector<std::size_t>& gen_indices) {
  const std::size_t order = size();
  // Conjugating by a two-element generating set is much cheaper than by the full
  // generator list; look for one among deterministic pseudo-random pairs.
  std::vector<std::size_t> conj_set = gen_indices;
  std::mt19937_64 rng(0x5eed);
  std::vector<char> mark(order);
  for (int attempt = 0; attempt < 32 && order > 1; ++attempt) {
    const std::size_t a = rng() % order, b = rng() % order;
    std::fill(mark.begin(), mark.end(), 0);
    std::vector<std::size_t> queue{identity_};
    mark[identity_] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const std::size_t g : {a, b}) {
        const std::size_t y = mul(queue[head], g);
        if (!mark[y]) {
          mark[y] = 1;
          queue.push_back(y);
        }
      }
    if (queue.size() == order) {
      conj_set = {a, b};
      break;
    }
  }

  class_id_.assign(order, SIZE_MAX);
  for (std::size_t i = 0; i < order; ++i) {
    if (class_id_[i] != SIZE_MAX) continue;
    const std::size_t c = class_reps_.size();
    std::vector<std::size_t> members{i};
    class_id_[i] = c;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (const std::size_t g : conj_set) {
        const std::size_t y = conj(g, members[head]);
        if (class_id_[y] == SIZE_MAX) {
          class_id_[y] = c;
          members.push_back(y);
        }
      }
    std::sort(members.begin(), members.end());
    class_reps_.push_back(i);
    class_sizes_.push_back(members.size());
    class_members_.push_back(std::move(members));
  }
}

Matrix GroupTable::matrix(std::size_t i) const {
  require(!is_perm(), "permutation table has no matrices");
  Matrix m(field_, n_, n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) m(r, c) = Elem{data_[i * n_ * n_ + r * n_ + c]};
  return m;
}

Permutation GroupTable::perm(std::size_t i) const {
  require(is_perm(), "matrix table has no permutations");
  std::vector<std::uint8_t> im(n_);
  for (std::size_t x = 0; x < n_; ++x) im[x] = static_cast<std::uint8_t>(data_[i * n_ + x]);
  return Permutation(std::move(im));
}

std::optional<std::size_t> GroupTable::index_of_key(std::uint64_t key) const {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

std::optional<std::size_t> GroupTable::index_of(const Matrix& g) const {
  require(!is_perm(), "permutation table has no matrices");
  require(g.rows() == n_ && g.cols() == n_ && g.field_ptr() == field_, "matrix does not fit the table");
  std::vector<std::uint16_t> buf(stride());
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = g.data()[i].v;
  return index_of_key(encode(buf.data()));
}

std::optional<std::size_t> GroupTable::index_of(const Permutation& g) const {
  require(is_perm(), "matrix table has no permutations");
  require(g.degree() == n_, "permutation degree does not fit the table");
  std::vector<std::uint16_t> buf(n_);
  for (std::size_t x = 0; x < n_; ++x) buf[x] = g[x];
  return index_of_key(encode(buf.data()));
}

std::size_t GroupTable::mul(std::size_t a, std::size_t b) const {
  const std::size_t st = stride();
  std::uint16_t buf[256];
  multiply(&data_[a * st], &data_[b * st], buf);
  const auto idx = index_of_key(encode(buf));
  if (!idx) internal_fail("product left the enumerated group");
  return *idx;
}

}  // namespace ultralat
