#include "actforge/monoid.hpp"

#include <algorithm>
#include <utility>

#include "actforge/act.hpp"
#include "actforge/config.hpp"
#include "actforge/error.hpp"

namespace actforge {

namespace {

void check_shape(std::size_t order, const std::vector<Elem>& table,
                 Elem identity, const std::vector<std::string>& labels) {
  if (order == 0) {
    throw ActError(ErrorKind::OutOfRange, "a monoid has at least one element");
  }
  if (order > size_cap()) {
    throw ActError(ErrorKind::SizeLimit,
                   "monoid order " + std::to_string(order) +
                       " exceeds the size cap " + std::to_string(size_cap()));
  }
  if (table.size() != order * order) {
    throw ActError(ErrorKind::OutOfRange,
                   "table has " + std::to_string(table.size()) +
                       " entries, expected " + std::to_string(order * order));
  }
  for (Elem v : table) {
    if (v >= order) {
      throw ActError(ErrorKind::OutOfRange,
                     "table entry " + std::to_string(v) + " out of range",
                     {v});
    }
  }
  if (identity >= order) {
    throw ActError(ErrorKind::OutOfRange, "identity index out of range",
                   {identity});
  }
  if (!labels.empty() && labels.size() != order) {
    throw ActError(ErrorKind::OutOfRange,
                   "label count does not match the order");
  }
}

void check_axioms(std::size_t order, const std::vector<Elem>& table,
                  Elem identity) {
  for (Elem a = 0; a < order; ++a) {
    if (table[identity * order + a] != a || table[a * order + identity] != a) {
      throw ActError(ErrorKind::BadIdentity,
                     "identity laws fail at element " + std::to_string(a),
                     {a});
    }
  }
  const Elem* t = table.data();
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      const Elem ab = t[a * order + b];
      for (Elem c = 0; c < order; ++c) {
        if (t[ab * order + c] != t[a * order + t[b * order + c]]) {
          throw ActError(ErrorKind::NotAssociative,
                         "(a b) c != a (b c) at a=" + std::to_string(a) +
                             " b=" + std::to_string(b) +
                             " c=" + std::to_string(c),
                         {a, b, c});
        }
      }
    }
  }
}

}  // namespace

std::string FiniteMonoid::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return std::to_string(a);
}

bool FiniteMonoid::same_table(const FiniteMonoid& other) const noexcept {
  return order_ == other.order_ && identity_ == other.identity_ &&
         table_ == other.table_;
}

MonoidPtr validate_monoid(std::size_t order, std::vector<Elem> table,
                          Elem identity, std::vector<std::string> labels) {
  check_shape(order, table, identity, labels);
  check_axioms(order, table, identity);
  return MonoidPtr(new FiniteMonoid(order, std::move(table), identity,
                                    std::move(labels)));
}

MonoidPtr make_monoid_unchecked(std::size_t order, std::vector<Elem> table,
                                Elem identity, std::vector<std::string> labels) {
  check_shape(order, table, identity, labels);
  return MonoidPtr(new FiniteMonoid(order, std::move(table), identity,
                                    std::move(labels)));
}

void revalidate(const FiniteMonoid& m) {
  check_axioms(m.order(), m.table(), m.identity());
}

MonoidPtr direct_product_monoid(const MonoidPtr& m, const MonoidPtr& n) {
  const std::size_t mo = m->order(), no = n->order();
  const std::size_t order = mo * no;
  if (order > size_cap()) {
    throw ActError(ErrorKind::SizeLimit,
                   "product order " + std::to_string(order) +
                       " exceeds the size cap");
  }
  std::vector<Elem> table(order * order);
  for (Elem a = 0; a < order; ++a) {
    const auto [am, an] = product_decode(a, no);
    for (Elem b = 0; b < order; ++b) {
      const auto [bm, bn] = product_decode(b, no);
      table[a * order + b] = product_index(m->mul(am, bm), n->mul(an, bn), no);
    }
  }
  std::vector<std::string> labels(order);
  for (Elem a = 0; a < order; ++a) {
    const auto [am, an] = product_decode(a, no);
    labels[a] = "(" + m->label(am) + "," + n->label(an) + ")";
  }
  return make_monoid_unchecked(
      order, std::move(table), product_index(m->identity(), n->identity(), no),
      std::move(labels));
}

MonoidPtr adjoin_zero(const MonoidPtr& m) {
  const std::size_t mo = m->order();
  const std::size_t order = mo + 1;
  if (order > size_cap()) {
    throw ActError(ErrorKind::SizeLimit, "adjoining a zero exceeds the cap");
  }
  const Elem zero = static_cast<Elem>(mo);
  std::vector<Elem> table(order * order, zero);
  for (Elem a = 0; a < mo; ++a) {
    for (Elem b = 0; b < mo; ++b) table[a * order + b] = m->mul(a, b);
  }
  std::vector<std::string> labels(order);
  for (Elem a = 0; a < mo; ++a) labels[a] = m->label(a);
  labels[zero] = "0";
  return make_monoid_unchecked(order, std::move(table), m->identity(),
                               std::move(labels));
}

MonoidPtr attach_act_monoid(const MonoidPtr& m, const FiniteAct& a) {
  if (!a.base()->same_table(*m)) {
    throw ActError(ErrorKind::BaseMismatch,
                   "the act is not over the given monoid");
  }
  const std::size_t mo = m->order(), ao = a.size();
  const std::size_t order = mo + ao;
  if (order > size_cap()) {
    throw ActError(ErrorKind::SizeLimit,
                   "attached monoid order exceeds the cap");
  }
  std::vector<Elem> table(order * order);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      Elem r;
      if (y >= mo) {
        r = y;  // y in A: absorbed
      } else if (x < mo) {
        r = m->mul(x, y);
      } else {
        r = static_cast<Elem>(mo + a.act(static_cast<Elem>(x - mo), y));
      }
      table[x * order + y] = r;
    }
  }
  std::vector<std::string> labels(order);
  for (Elem x = 0; x < mo; ++x) labels[x] = m->label(x);
  for (Elem x = 0; x < ao; ++x) labels[mo + x] = "a" + a.label(x);
  return make_monoid_unchecked(order, std::move(table), m->identity(),
                               std::move(labels));
}

Elem transformation_index(std::span<const Elem> image, unsigned n) {
  Elem e = 0;
  std::uint64_t pow = 1;
  for (unsigned i = 0; i < n; ++i) {
    e = static_cast<Elem>(e + image[i] * pow);
    pow *= n;
  }
  return e;
}

std::vector<Elem> transformation_image(Elem e, unsigned n) {
  std::vector<Elem> image(n);
  for (unsigned i = 0; i < n; ++i) {
    image[i] = e % n;
    e /= n;
  }
  return image;
}

MonoidPtr full_transformation_monoid(unsigned n) {
  if (n == 0) {
    throw ActError(ErrorKind::OutOfRange, "n must be positive");
  }
  std::uint64_t order = 1;
  for (unsigned i = 0; i < n; ++i) {
    order *= n;
    if (order > size_cap()) {
      throw ActError(ErrorKind::SizeLimit,
                     "n^n exceeds the size cap for n = " + std::to_string(n));
    }
  }
  const std::size_t o = static_cast<std::size_t>(order);
  std::vector<std::vector<Elem>> images(o);
  for (Elem e = 0; e < o; ++e) images[e] = transformation_image(e, n);

  // (f g)(i) = g(f(i)): apply the left factor first, so that the natural
  // point action i . f = f(i) is a right action.
  std::vector<Elem> table(o * o);
  std::vector<Elem> buf(n);
  for (Elem f = 0; f < o; ++f) {
    for (Elem g = 0; g < o; ++g) {
      for (unsigned i = 0; i < n; ++i) buf[i] = images[g][images[f][i]];
      table[f * o + g] = transformation_index(buf, n);
    }
  }
  std::vector<Elem> ident(n);
  for (unsigned i = 0; i < n; ++i) ident[i] = i;
  std::vector<std::string> labels(o);
  for (Elem e = 0; e < o; ++e) {
    std::string s = "[";
    for (unsigned i = 0; i < n; ++i) s += std::to_string(images[e][i]);
    labels[e] = s + "]";
  }
  return make_monoid_unchecked(o, std::move(table),
                               transformation_index(ident, n),
                               std::move(labels));
}

bool generates_monoid(const FiniteMonoid& m, std::span<const Elem> gens) {
  std::vector<bool> seen(m.order(), false);
  std::vector<Elem> stack{m.identity()};
  seen[m.identity()] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Elem a = stack.back();
    stack.pop_back();
    for (Elem g : gens) {
      const Elem b = m.mul(a, g);
      if (!seen[b]) {
        seen[b] = true;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == m.order();
}

}  // namespace actforge
