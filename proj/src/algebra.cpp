#include "cantor/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

constexpr long long kTermwiseLengthCap = 1LL << 22;

}  // namespace

OpTable::OpTable(Alphabet alphabet, std::vector<std::vector<Symbol>> table,
                 std::optional<Symbol> identity,
                 std::optional<std::vector<Symbol>> inverse)
    : alphabet_(std::move(alphabet)), identity_(identity), inverse_(std::move(inverse)) {
  int n = alphabet_.size();
  if (static_cast<int>(table.size()) != n)
    throw Error(Error::Kind::invalid_input, "operation table must have one row per symbol");
  table_.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(Error::Kind::invalid_input, "operation table row has wrong length");
    for (Symbol s : row) {
      if (!alphabet_.contains(s))
        throw Error(Error::Kind::invalid_input, "operation table entry outside alphabet");
      table_.push_back(s);
    }
  }
  if (identity_) {
    if (!alphabet_.contains(*identity_))
      throw Error(Error::Kind::invalid_input, "declared identity outside alphabet");
    for (Symbol a = 0; a < n; ++a)
      if (apply(*identity_, a) != a || apply(a, *identity_) != a)
        throw Error(Error::Kind::invalid_input, "declared identity fails the identity law");
  }
  if (inverse_) {
    if (!identity_)
      throw Error(Error::Kind::invalid_input, "inverse map requires a declared identity");
    if (static_cast<int>(inverse_->size()) != n)
      throw Error(Error::Kind::invalid_input, "inverse map must cover the alphabet");
    for (Symbol a = 0; a < n; ++a) {
      Symbol b = (*inverse_)[static_cast<std::size_t>(a)];
      if (!alphabet_.contains(b) || apply(a, b) != *identity_ || apply(b, a) != *identity_)
        throw Error(Error::Kind::invalid_input, "declared inverse fails the inverse law");
    }
  }
}

OpTable OpTable::cyclic(int n) {
  if (n < 1) throw Error(Error::Kind::invalid_input, "cyclic group order must be >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<Symbol>> table(static_cast<std::size_t>(n),
                                         std::vector<Symbol>(static_cast<std::size_t>(n)));
  std::vector<Symbol> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    inverse[static_cast<std::size_t>(i)] = (n - i) % n;
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return OpTable(Alphabet(std::move(labels), 0), std::move(table), 0, std::move(inverse));
}

Symbol OpTable::apply(Symbol a, Symbol b) const {
  int n = alphabet_.size();
  if (!alphabet_.contains(a) || !alphabet_.contains(b))
    throw Error(Error::Kind::invalid_input, "operand outside alphabet");
  return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(b)];
}

std::optional<Symbol> OpTable::find_identity() const {
  int n = alphabet_.size();
  for (Symbol e = 0; e < n; ++e) {
    bool ok = true;
    for (Symbol a = 0; a < n && ok; ++a)
      ok = apply(e, a) == a && apply(a, e) == a;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<Symbol> OpTable::inverse_of(Symbol a) const {
  if (inverse_) return (*inverse_)[static_cast<std::size_t>(a)];
  auto e = find_identity();
  if (!e) return std::nullopt;
  for (Symbol b = 0; b < alphabet_.size(); ++b)
    if (apply(a, b) == *e && apply(b, a) == *e) return b;
  return std::nullopt;
}

OpTableReport validate_op_table(const OpTable& t) {
  OpTableReport report;
  int n = t.alphabet().size();

  report.associative = true;
  for (Symbol a = 0; a < n && report.associative; ++a)
    for (Symbol b = 0; b < n && report.associative; ++b)
      for (Symbol c = 0; c < n; ++c)
        if (t.apply(t.apply(a, b), c) != t.apply(a, t.apply(b, c))) {
          report.associative = false;
          report.failing_triple = {a, b, c};
          break;
        }

  report.identity = t.find_identity();
  report.has_identity = report.identity.has_value();

  if (report.has_identity) {
    report.is_group = report.associative;
    for (Symbol a = 0; a < n && report.is_group; ++a)
      if (!t.inverse_of(a)) {
        report.is_group = false;
        report.missing_inverse = a;
      }
  }
  return report;
}

TermwiseStructure::TermwiseStructure(OpTable table) { tables_.push_back(std::move(table)); }

TermwiseStructure::TermwiseStructure(std::vector<OpTable> tables) : tables_(std::move(tables)) {
  if (tables_.empty())
    throw Error(Error::Kind::invalid_input, "termwise structure needs at least one table");
}

const OpTable& TermwiseStructure::table_at(int level) const {
  if (level < 1)
    throw Error(Error::Kind::invalid_input, "levels are 1-indexed");
  return tables_[static_cast<std::size_t>(level - 1) % tables_.size()];
}

LevelSystem TermwiseStructure::level_system() const {
  std::vector<Alphabet> cycle;
  cycle.reserve(tables_.size());
  for (const auto& t : tables_) cycle.push_back(t.alphabet());
  return LevelSystem::cycling(std::move(cycle));
}

bool TermwiseStructure::is_homogeneous() const {
  return std::all_of(tables_.begin(), tables_.end(), [&](const OpTable& t) {
    return t.alphabet() == tables_.front().alphabet();
  });
}

SequenceDescriptor termwise_op(const SequenceDescriptor& x, const SequenceDescriptor& y,
                               const TermwiseStructure& s) {
  LevelSystem system = s.level_system();
  validate(system, x);
  validate(system, y);

  long long pre_len = std::max(x.preperiod().size(), y.preperiod().size());
  long long per_len = std::lcm(std::lcm(static_cast<long long>(x.period().size()),
                                        static_cast<long long>(y.period().size())),
                               static_cast<long long>(s.cycle_length()));
  if (pre_len + per_len > kTermwiseLengthCap)
    throw Error(Error::Kind::budget, "termwise result length exceeds the cap");

  Letters pre, per;
  for (long long l = 1; l <= pre_len + per_len; ++l) {
    Symbol z = s.table_at(static_cast<int>(l))
                   .apply(x.symbol_at(static_cast<int>(l)), y.symbol_at(static_cast<int>(l)));
    (l <= pre_len ? pre : per).push_back(z);
  }
  return SequenceDescriptor(std::move(pre), std::move(per));
}

SequenceDescriptor termwise_inverse(const SequenceDescriptor& x, const TermwiseStructure& s) {
  LevelSystem system = s.level_system();
  validate(system, x);

  long long pre_len = static_cast<long long>(x.preperiod().size());
  long long per_len = std::lcm(static_cast<long long>(x.period().size()),
                               static_cast<long long>(s.cycle_length()));
  if (pre_len + per_len > kTermwiseLengthCap)
    throw Error(Error::Kind::budget, "termwise result length exceeds the cap");

  Letters pre, per;
  for (long long l = 1; l <= pre_len + per_len; ++l) {
    auto inv = s.table_at(static_cast<int>(l)).inverse_of(x.symbol_at(static_cast<int>(l)));
    if (!inv)
      throw Error(Error::Kind::domain, "termwise inverse requires group tables");
    (l <= pre_len ? pre : per).push_back(*inv);
  }
  return SequenceDescriptor(std::move(pre), std::move(per));
}

BiSequenceDescriptor termwise_op(const BiSequenceDescriptor& x, const BiSequenceDescriptor& y,
                                 const OpTable& table) {
  validate(table.alphabet(), x);
  validate(table.alphabet(), y);

  int lo = std::min(x.center_start(), y.center_start());
  int hi = std::max(x.center_end(), y.center_end());
  long long left = std::lcm(static_cast<long long>(x.left_period().size()),
                            static_cast<long long>(y.left_period().size()));
  long long right = std::lcm(static_cast<long long>(x.right_period().size()),
                             static_cast<long long>(y.right_period().size()));
  if (left + right + (hi - lo + 1) > kTermwiseLengthCap)
    throw Error(Error::Kind::budget, "termwise result length exceeds the cap");

  auto combine = [&](long long l) {
    return table.apply(x.symbol_at(static_cast<int>(l)), y.symbol_at(static_cast<int>(l)));
  };
  Letters left_per, center, right_per;
  for (long long l = lo - left; l < lo; ++l) left_per.push_back(combine(l));
  for (long long l = lo; l <= hi; ++l) center.push_back(combine(l));
  for (long long l = hi + 1; l <= hi + right; ++l) right_per.push_back(combine(l));
  return BiSequenceDescriptor(std::move(left_per), std::move(center), std::move(right_per), lo);
}

bool locality_check(const TermwiseStructure& s, int m) {
  if (!s.is_homogeneous())
    throw Error(Error::Kind::domain, "locality check requires a homogeneous alphabet");
  const Alphabet& e = s.table_at(1).alphabet();
  if (e.size() > 4 || m < 0 || m > 4)
    throw Error(Error::Kind::domain, "locality check is exhaustive: |E| <= 4, m <= 4");

  LevelSystem system = LevelSystem::homogeneous(e);
  auto op_word = [&](const Letters& u, const Letters& v) {
    Letters out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
      out[i] = s.table_at(static_cast<int>(i) + 1).apply(u[i], v[i]);
    return out;
  };

  bool local = true;
  for_each_word(system, m, [&](const Letters& u) {
    if (!local) return;
    for_each_word(system, m, [&](const Letters& v) {
      if (!local) return;
      Letters base = op_word(u, v);
      // Every one-level tail extension must reproduce the same depth-m block.
      Letters ue = u, ve = v;
      ue.push_back(0);
      ve.push_back(0);
      for (Symbol a = 0; a < e.size() && local; ++a)
        for (Symbol b = 0; b < e.size() && local; ++b) {
          ue.back() = a;
          ve.back() = b;
          Letters ext = op_word(ue, ve);
          local = std::equal(base.begin(), base.end(), ext.begin());
        }
    });
  });
  return local;
}

}  // namespace cantor
