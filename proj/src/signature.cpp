#include "bilat/signature.hpp"

#include "bilat/printer.hpp"

namespace bilat {

const char* subset_name(Subset s) {
  switch (s) {
    case Subset::Full: return "full";
    case Subset::ProofOnly: return "proof-only";
    case Subset::DualOnly: return "dual-only";
  }
  throw std::logic_error("subset_name: bad subset");
}

Subset subset_from_name(const std::string& name) {
  if (name == "full") return Subset::Full;
  if (name == "proof-only") return Subset::ProofOnly;
  if (name == "dual-only") return Subset::DualOnly;
  throw std::invalid_argument("unknown rule subset '" + name + "'");
}

Signature::Signature() {
  for (auto& v : copies_) v.push_back(Subset::Full);
}

std::size_t Signature::slot(Kind conn) {
  switch (conn) {
    case Kind::And: return 0;
    case Kind::Or: return 1;
    case Kind::Imp: return 2;
    case Kind::Coimp: return 3;
    case Kind::Top: return 4;
    case Kind::Bot: return 5;
    default: throw std::logic_error("signature: atoms carry no tag");
  }
}

unsigned Signature::add_copy(Kind conn, Subset subset) {
  auto& v = copies_[slot(conn)];
  v.push_back(subset);
  return static_cast<unsigned>(v.size() - 1);
}

unsigned Signature::copies(Kind conn) const {
  return static_cast<unsigned>(copies_[slot(conn)].size());
}

bool Signature::known(Kind conn, unsigned copy) const {
  return conn != Kind::Atom && copy < copies_[slot(conn)].size();
}

Subset Signature::subset(Kind conn, unsigned copy) const {
  const auto& v = copies_[slot(conn)];
  if (copy >= v.size())
    throw UnknownTagError("connective copy not enabled in signature: " +
                          std::string(kind_word(conn)) + "/" + std::to_string(copy));
  return v[copy];
}

void Signature::validate(const Formula& f) const {
  if (f.kind() == Kind::Atom) return;
  if (!known(f.kind(), f.copy()))
    throw UnknownTagError("unknown tag in formula '" + print_formula(f) + "': " +
                          std::string(kind_word(f.kind())) + "/" + std::to_string(f.copy()));
  if (is_binary(f.kind())) {
    validate(f.left());
    validate(f.right());
  }
}

void Signature::validate(const Sequent& s) const {
  for (const auto& f : s.gamma.items()) validate(f);
  for (const auto& f : s.delta.items()) validate(f);
  validate(s.succedent);
}

Signature Signature::dualized() const {
  Signature out;
  for (Kind k : {Kind::And, Kind::Or, Kind::Imp, Kind::Coimp, Kind::Top, Kind::Bot}) {
    const auto& v = copies_[slot(k)];
    auto& w = out.copies_[slot(dual_kind(k))];
    w.clear();
    for (Subset s : v) {
      switch (s) {
        case Subset::Full: w.push_back(Subset::Full); break;
        case Subset::ProofOnly: w.push_back(Subset::DualOnly); break;
        case Subset::DualOnly: w.push_back(Subset::ProofOnly); break;
      }
    }
  }
  return out;
}

Signature extend_signature(const Signature& base, Kind conn, Subset subset) {
  Signature out = base;
  out.add_copy(conn, subset);
  return out;
}

}  // namespace bilat
