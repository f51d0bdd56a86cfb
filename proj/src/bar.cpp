#include "hhq8/bar.hpp"

#include "detail/text.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hhq8 {

namespace {

void check_mids(const MidTuple& mids) {
  for (auto m : mids) {
    if (m == Monomial::one) throw std::invalid_argument("unit in a normalized interior slot");
  }
}

std::uint64_t pack(std::span<const Monomial> args) {
  std::uint64_t key = 0;
  for (auto m : args) key = (key << 3) | index(m);
  return key;
}

AlgebraElement parse_outer(const std::string& s) { return parse_element(detail::unwrap(s)); }

}  // namespace

void BarChain::add(const BarTensor& t) {
  if (t.degree() != degree_) throw std::invalid_argument("bar tensor degree mismatch");
  check_mids(t.mids);
  if (auto [it, inserted] = terms_.insert(t); !inserted) terms_.erase(it);
}

BarChain& BarChain::operator+=(const BarChain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("bar chain degree mismatch");
  for (const auto& t : other.terms_) add(t);
  return *this;
}

BarChain operator*(AlgebraElement a, const BarChain& c) {
  BarChain out(c.degree());
  for (const auto& t : c.terms()) {
    (a * AlgebraElement(t.left)).for_each_term([&](Monomial l) { out.add({l, t.mids, t.right}); });
  }
  return out;
}

BarChain operator*(const BarChain& c, AlgebraElement a) {
  BarChain out(c.degree());
  for (const auto& t : c.terms()) {
    (AlgebraElement(t.right) * a).for_each_term([&](Monomial r) { out.add({t.left, t.mids, r}); });
  }
  return out;
}

BarChain parse_bar_chain(int degree, std::string_view text) {
  BarChain out(degree);
  const std::string body = detail::trim(text);
  if (body == "0") return out;
  for (const auto& term : detail::split_top(body, '+')) {
    const auto factors = detail::split_top(term, '|');
    if (static_cast<int>(factors.size()) != degree + 2) {
      throw std::invalid_argument("bar term has wrong number of factors: " + term);
    }
    MidTuple mids;
    for (int i = 1; i <= degree; ++i) {
      const auto m = parse_monomial(factors[i]);
      if (!m) throw std::invalid_argument("bad interior factor: " + factors[i]);
      mids.push_back(*m);
    }
    const AlgebraElement left = parse_outer(factors.front());
    const AlgebraElement right = parse_outer(factors.back());
    left.for_each_term([&](Monomial l) { right.for_each_term([&](Monomial r) { out.add({l, mids, r}); }); });
  }
  return out;
}

std::string to_string(const BarChain& c) {
  if (c.is_zero()) return "0";
  std::string s;
  for (const auto& t : c.terms()) {
    if (!s.empty()) s += " + ";
    s += name(t.left);
    for (auto m : t.mids) {
      s += '|';
      s += name(m);
    }
    s += '|';
    s += name(t.right);
  }
  return s;
}

BarChain bar_differential(const BarChain& c) {
  const int n = c.degree();
  if (n < 1) throw std::domain_error("bar differential needs degree >= 1");
  BarChain out(n - 1);
  for (const auto& t : c.terms()) {
    const auto& m = t.mids;
    // Left face.
    (AlgebraElement(t.left) * m.front()).for_each_term([&](Monomial l) {
      out.add({l, MidTuple(m.begin() + 1, m.end()), t.right});
    });
    // Interior faces. Products of non-unit monomials never contain the unit.
    for (int i = 0; i + 1 < n; ++i) {
      (AlgebraElement(m[i]) * m[i + 1]).for_each_term([&](Monomial p) {
        MidTuple mids(m.begin(), m.begin() + i);
        mids.push_back(p);
        mids.insert(mids.end(), m.begin() + i + 2, m.end());
        out.add({t.left, std::move(mids), t.right});
      });
    }
    // Right face.
    (AlgebraElement(m.back()) * t.right).for_each_term([&](Monomial r) {
      out.add({t.left, MidTuple(m.begin(), m.end() - 1), r});
    });
  }
  return out;
}

BarChain bar_contraction(const BarChain& c) {
  BarChain out(c.degree() + 1);
  for (const auto& t : c.terms()) {
    if (t.left == Monomial::one) continue;
    MidTuple mids;
    mids.reserve(t.mids.size() + 1);
    mids.push_back(t.left);
    mids.insert(mids.end(), t.mids.begin(), t.mids.end());
    out.add({Monomial::one, std::move(mids), t.right});
  }
  return out;
}

struct BarCochain::State {
  Evaluator eval;
  mutable std::mutex mutex;
  mutable std::unordered_map<std::uint64_t, AlgebraElement> memo;
};

BarCochain::BarCochain(int degree, Evaluator eval) : degree_(degree), state_(std::make_shared<State>()) {
  if (degree < 0) throw std::invalid_argument("negative cochain degree");
  state_->eval = std::move(eval);
}

BarCochain BarCochain::constant(AlgebraElement value) {
  return BarCochain(0, [value](std::span<const Monomial>) { return value; });
}

BarCochain BarCochain::zero(int degree) {
  return BarCochain(degree, [](std::span<const Monomial>) { return AlgebraElement(); });
}

AlgebraElement BarCochain::operator()(std::span<const Monomial> args) const {
  if (static_cast<int>(args.size()) != degree_) throw std::invalid_argument("cochain arity mismatch");
  for (auto m : args) {
    if (m == Monomial::one) return {};
  }
  const std::uint64_t key = pack(args);
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->memo.find(key); it != state_->memo.end()) return it->second;
  }
  // Evaluated outside the lock: the evaluator may recurse into other cochains.
  const AlgebraElement value = state_->eval(args);
  std::lock_guard lock(state_->mutex);
  state_->memo.emplace(key, value);
  return value;
}

AlgebraElement BarCochain::on_tensor(const BarTensor& t) const {
  return AlgebraElement(t.left) * (*this)(t.mids) * AlgebraElement(t.right);
}

AlgebraElement BarCochain::on_chain(const BarChain& c) const {
  AlgebraElement out;
  for (const auto& t : c.terms()) out += on_tensor(t);
  return out;
}

std::size_t BarCochain::cached_values() const {
  std::lock_guard lock(state_->mutex);
  return state_->memo.size();
}

BarCochain operator+(const BarCochain& f, const BarCochain& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("cochain degree mismatch");
  return BarCochain(f.degree(), [f, g](std::span<const Monomial> a) { return f(a) + g(a); });
}

AlgebraElement evaluate_at_slot(const BarCochain& f, MidTuple args, std::size_t slot, AlgebraElement value) {
  AlgebraElement out;
  value.for_each_term([&](Monomial m) {
    if (m == Monomial::one) return;
    args[slot] = m;
    out += f(args);
  });
  return out;
}

BarCochain cochain_differential(const BarCochain& f) {
  const int r = f.degree();
  return BarCochain(r + 1, [f, r](std::span<const Monomial> a) {
    AlgebraElement v = AlgebraElement(a.front()) * f(a.subspan(1));
    for (int i = 0; i < r; ++i) {
      MidTuple args(a.begin(), a.begin() + i);
      args.push_back(Monomial::one);
      args.insert(args.end(), a.begin() + i + 2, a.end());
      v += evaluate_at_slot(f, std::move(args), static_cast<std::size_t>(i), AlgebraElement(a[i]) * a[i + 1]);
    }
    v += f(a.first(static_cast<std::size_t>(r))) * AlgebraElement(a.back());
    return v;
  });
}

BarCochain cup(const BarCochain& f, const BarCochain& g) {
  const auto n = static_cast<std::size_t>(f.degree());
  return BarCochain(f.degree() + g.degree(),
                    [f, g, n](std::span<const Monomial> a) { return f(a.first(n)) * g(a.subspan(n)); });
}

BarCochain circle_i(const BarCochain& f, const BarCochain& g, int i) {
  const int n = f.degree();
  const int m = g.degree();
  if (n < 1 || i < 1 || i > n) throw std::out_of_range("circle_i: slot out of range");
  const auto slot = static_cast<std::size_t>(i - 1);
  if (m == 0) {
    const AlgebraElement beta = g({});
    return BarCochain(n - 1, [f, beta, slot](std::span<const Monomial> a) {
      MidTuple args(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(slot));
      args.push_back(Monomial::one);
      args.insert(args.end(), a.begin() + static_cast<std::ptrdiff_t>(slot), a.end());
      return evaluate_at_slot(f, std::move(args), slot, beta);
    });
  }
  const auto width = static_cast<std::size_t>(m);
  return BarCochain(n + m - 1, [f, g, slot, width](std::span<const Monomial> a) {
    const AlgebraElement inner = g(a.subspan(slot, width));
    MidTuple args(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(slot));
    args.push_back(Monomial::one);
    args.insert(args.end(), a.begin() + static_cast<std::ptrdiff_t>(slot + width), a.end());
    return evaluate_at_slot(f, std::move(args), slot, inner);
  });
}

BarCochain circle(const BarCochain& f, const BarCochain& g) {
  const int n = f.degree();
  const int m = g.degree();
  if (n + m < 1) throw std::domain_error("circle product of two degree-0 cochains");
  if (n == 0) return BarCochain::zero(m - 1);
  std::vector<BarCochain> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(circle_i(f, g, i));
  return BarCochain(n + m - 1, [parts](std::span<const Monomial> a) {
    AlgebraElement v;
    for (const auto& p : parts) v += p(a);
    return v;
  });
}

BarCochain bracket(const BarCochain& f, const BarCochain& g) {
  if (f.degree() + g.degree() < 1) throw std::domain_error("bracket of two degree-0 cochains");
  return circle(f, g) + circle(g, f);
}

BarCochain tradler_delta(const BarCochain& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("Delta is defined for degree >= 1");
  return BarCochain(n - 1, [f, n](std::span<const Monomial> a) {
    AlgebraElement v;
    MidTuple args(static_cast<std::size_t>(n));
    for (auto b : kRadicalBasis) {
      bool coefficient = false;
      // Rotation i places a_i..a_{n-1}, b, a_1..a_{i-1}.
      for (int i = 1; i <= n; ++i) {
        std::size_t k = 0;
        for (int j = i; j <= n - 1; ++j) args[k++] = a[j - 1];
        args[k++] = b;
        for (int j = 1; j < i; ++j) args[k++] = a[j - 1];
        coefficient ^= socle_pairing_with_one(f(args));
      }
      if (coefficient) v += dual_basis(b);
    }
    return v;
  });
}

void HochschildChain::add(const HochschildTensor& t) {
  if (t.degree() != degree_) throw std::invalid_argument("Hochschild tensor degree mismatch");
  check_mids(t.mids);
  if (auto [it, inserted] = terms_.insert(t); !inserted) terms_.erase(it);
}

HochschildChain& HochschildChain::operator+=(const HochschildChain& other) {
  if (other.degree_ != degree_) throw std::invalid_argument("Hochschild chain degree mismatch");
  for (const auto& t : other.terms_) add(t);
  return *this;
}

HochschildChain chain_differential(const HochschildChain& c) {
  const int r = c.degree();
  if (r < 1) throw std::domain_error("chain differential needs degree >= 1");
  HochschildChain out(r - 1);
  for (const auto& t : c.terms()) {
    const auto& m = t.mids;
    (AlgebraElement(t.head) * m.front()).for_each_term([&](Monomial h) {
      out.add({h, MidTuple(m.begin() + 1, m.end())});
    });
    for (int i = 0; i + 1 < r; ++i) {
      (AlgebraElement(m[i]) * m[i + 1]).for_each_term([&](Monomial p) {
        MidTuple mids(m.begin(), m.begin() + i);
        mids.push_back(p);
        mids.insert(mids.end(), m.begin() + i + 2, m.end());
        out.add({t.head, std::move(mids)});
      });
    }
    (AlgebraElement(m.back()) * t.head).for_each_term([&](Monomial h) {
      out.add({h, MidTuple(m.begin(), m.end() - 1)});
    });
  }
  return out;
}

HochschildChain connes_B(const HochschildChain& c) {
  const int r = c.degree();
  HochschildChain out(r + 1);
  for (const auto& t : c.terms()) {
    if (t.head == Monomial::one) continue;
    // Cyclic word a_0 a_1 .. a_r; rotation i starts at a_i.
    MidTuple cyc;
    cyc.push_back(t.head);
    cyc.insert(cyc.end(), t.mids.begin(), t.mids.end());
    for (int i = 0; i <= r; ++i) {
      MidTuple mids(cyc.begin() + i, cyc.end());
      mids.insert(mids.end(), cyc.begin(), cyc.begin() + i);
      out.add({Monomial::one, std::move(mids)});
    }
  }
  return out;
}

bool pair(const BarCochain& f, const HochschildChain& c) {
  bool v = false;
  for (const auto& t : c.terms()) v ^= bilinear_form(f(t.mids), t.head);
  return v;
}

std::vector<MidTuple> all_mid_tuples(int n) {
  std::vector<MidTuple> out{MidTuple{}};
  for (int k = 0; k < n; ++k) {
    std::vector<MidTuple> next;
    next.reserve(out.size() * kRadicalBasis.size());
    for (const auto& t : out) {
      for (auto m : kRadicalBasis) {
        auto u = t;
        u.push_back(m);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace hhq8
