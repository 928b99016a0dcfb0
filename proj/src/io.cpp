#include "latcomp/io.hpp"

#include <fstream>
#include <sstream>

namespace latcomp::io {

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::subsetsum: return "subsetsum";
    case Kind::mod_subsetsum: return "mod-subsetsum";
    case Kind::cvp: return "cvp";
    case Kind::svp: return "svp";
    case Kind::ip: return "ip";
    case Kind::mvp: return "mvp";
    case Kind::or_manifest: return "or-manifest";
    }
    throw DomainError("unknown kind");
}

Kind kind_from_name(const std::string& s) {
    for (Kind k : {Kind::subsetsum, Kind::mod_subsetsum, Kind::cvp, Kind::svp,
                   Kind::ip, Kind::mvp, Kind::or_manifest})
        if (s == kind_name(k))
            return k;
    throw ParseError("unknown kind: '" + s + "'");
}

namespace {

class Tok {
public:
    explicit Tok(const std::string& text) {
        std::istringstream in(text);
        std::string t;
        while (in >> t)
            toks_.push_back(t);
    }

    bool done() const { return pos_ == toks_.size(); }

    const std::string& peek() const {
        if (done())
            throw ParseError("unexpected end of instance text");
        return toks_[pos_];
    }

    std::string next() {
        std::string t = peek();
        ++pos_;
        return t;
    }

    void expect_key(const std::string& key) {
        std::string t = next();
        if (t != key + ":")
            throw ParseError("expected '" + key + ":', found '" + t + "'");
    }

    bool try_key(const std::string& key) {
        if (done() || peek() != key + ":")
            return false;
        ++pos_;
        return true;
    }

    BigInt next_int() { return num::bigint_from_string(next()); }
    Rat next_rat() { return num::rat_from_string(next()); }

    size_t next_count(const char* what) {
        BigInt v = next_int();
        if (v < 0 || v > 1'000'000)
            throw ParseError(std::string(what) + " out of range");
        return mpz_get_ui(v.get_mpz_t());
    }

private:
    std::vector<std::string> toks_;
    size_t pos_ = 0;
};

void expect_version(Tok& tok) {
    tok.expect_key("version");
    if (tok.next() != "1")
        throw ParseError("unsupported version");
}

unsigned parse_p(Tok& tok) {
    size_t p = tok.next_count("p");
    if (p < 2 || p % 2 != 0)
        throw ParseError("p must be even and >= 2");
    return static_cast<unsigned>(p);
}

lat::SubsetSumInstance parse_subsetsum(Tok& tok) {
    size_t n = tok.next_count("n");
    lat::SubsetSumInstance inst;
    tok.expect_key("values");
    inst.values.resize(n);
    for (size_t i = 0; i < n; ++i)
        inst.values[i] = tok.next_int();
    tok.expect_key("target");
    inst.target = tok.next_int();
    return inst;
}

lat::ModSubsetSumInstance parse_mod_subsetsum(Tok& tok) {
    size_t n = tok.next_count("n");
    lat::ModSubsetSumInstance inst;
    tok.expect_key("q");
    inst.modulus = tok.next_int();
    tok.expect_key("residues");
    inst.residues.resize(n);
    for (size_t i = 0; i < n; ++i)
        inst.residues[i] = tok.next_int();
    tok.expect_key("target");
    inst.target = tok.next_int();
    lat::validate(inst);
    return inst;
}

lin::ColsQ parse_basis(Tok& tok, size_t n, size_t m) {
    tok.expect_key("basis");
    lin::ColsQ cols(n, lin::VecQ(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < n; ++j)
            cols[j][i] = tok.next_rat();
    return cols;
}

lat::GapCvpInstance parse_cvp(Tok& tok) {
    size_t n = tok.next_count("n");
    tok.expect_key("m");
    size_t m = tok.next_count("m");
    tok.expect_key("p");
    lat::GapCvpInstance inst;
    inst.p = parse_p(tok);
    tok.expect_key("d");
    inst.d = tok.next_rat();
    tok.expect_key("gamma");
    inst.gamma = tok.next_rat();
    if (tok.try_key("tau"))
        inst.promise_tau = tok.next_rat();
    inst.basis = lat::Basis::make(parse_basis(tok, n, m));
    tok.expect_key("target");
    inst.target.resize(m);
    for (size_t i = 0; i < m; ++i)
        inst.target[i] = tok.next_rat();
    lat::validate(inst);
    return inst;
}

lat::GapSvpInstance parse_svp(Tok& tok) {
    size_t n = tok.next_count("n");
    tok.expect_key("m");
    size_t m = tok.next_count("m");
    tok.expect_key("p");
    lat::GapSvpInstance inst;
    inst.p = parse_p(tok);
    tok.expect_key("d");
    inst.d = tok.next_rat();
    tok.expect_key("gamma");
    inst.gamma = tok.next_rat();
    inst.basis = lat::Basis::make(parse_basis(tok, n, m));
    lat::validate(inst);
    return inst;
}

lat::RqCompressed parse_compressed(Tok& tok, Kind kind) {
    size_t n = tok.next_count("n");
    tok.expect_key("p");
    lat::RqCompressed inst;
    inst.form.n = n;
    inst.form.p = parse_p(tok);
    if ((kind == Kind::ip) != (inst.form.p == 2))
        throw ParseError("kind/p mismatch for compressed form");
    tok.expect_key("q");
    inst.q = tok.next_int();
    tok.expect_key("r");
    inst.r = tok.next_int();
    tok.expect_key("dpp");
    inst.dpp = tok.next_int();
    tok.expect_key("entries");
    const size_t count = lat::multi_index_count(n + 1, inst.form.p);
    inst.form.entries.resize(count);
    for (size_t i = 0; i < count; ++i)
        inst.form.entries[i] = tok.next_int();
    lat::validate(inst);
    return inst;
}

lat::RqCompressed parse_member(Tok& tok) {
    tok.expect_key("kind");
    Kind k = kind_from_name(tok.next());
    if (k != Kind::ip && k != Kind::mvp)
        throw ParseError("or-manifest member must be a compressed form");
    expect_version(tok);
    tok.expect_key("n");
    return parse_compressed(tok, k);
}

} // namespace

AnyInstance parse_instance(const std::string& text) {
    Tok tok(text);
    tok.expect_key("kind");
    AnyInstance out;
    out.kind = kind_from_name(tok.next());
    expect_version(tok);
    if (out.kind == Kind::or_manifest) {
        tok.expect_key("count");
        size_t count = tok.next_count("count");
        OrManifest man;
        man.members.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            tok.expect_key("member");
            man.members.push_back(parse_member(tok));
        }
        out.manifest = std::move(man);
    } else {
        tok.expect_key("n");
        switch (out.kind) {
        case Kind::subsetsum: out.subsetsum = parse_subsetsum(tok); break;
        case Kind::mod_subsetsum: out.mod_subsetsum = parse_mod_subsetsum(tok); break;
        case Kind::cvp: out.cvp = parse_cvp(tok); break;
        case Kind::svp: out.svp = parse_svp(tok); break;
        case Kind::ip:
        case Kind::mvp: out.compressed = parse_compressed(tok, out.kind); break;
        case Kind::or_manifest: break;
        }
    }
    if (!tok.done())
        throw ParseError("trailing tokens after instance: '" + tok.peek() + "'");
    return out;
}

AnyInstance read_instance(const std::string& path) {
    return parse_instance(read_file(path));
}

namespace {

void head(std::ostringstream& o, Kind k) {
    o << "kind: " << kind_name(k) << "\nversion: 1\n";
}

void put_ints(std::ostringstream& o, const std::vector<BigInt>& vs) {
    for (size_t i = 0; i < vs.size(); ++i) {
        o << num::to_string(vs[i]);
        o << ((i + 1) % 8 == 0 || i + 1 == vs.size() ? '\n' : ' ');
    }
}

void put_basis(std::ostringstream& o, const lat::Basis& b) {
    o << "basis:\n";
    for (size_t i = 0; i < b.dim_m(); ++i) {
        for (size_t j = 0; j < b.rank_n(); ++j)
            o << num::to_string(b.cols[j][i]) << (j + 1 == b.rank_n() ? '\n' : ' ');
    }
}

void put_compressed_body(std::ostringstream& o, const lat::RqCompressed& inst) {
    head(o, inst.form.p == 2 ? Kind::ip : Kind::mvp);
    o << "n: " << inst.form.n << "\np: " << inst.form.p << "\n";
    o << "q: " << num::to_string(inst.q) << "\n";
    o << "r: " << num::to_string(inst.r) << "\n";
    o << "dpp: " << num::to_string(inst.dpp) << "\n";
    o << "entries:\n";
    put_ints(o, inst.form.entries);
}

} // namespace

std::string to_text(const lat::SubsetSumInstance& inst) {
    std::ostringstream o;
    head(o, Kind::subsetsum);
    o << "n: " << inst.values.size() << "\nvalues:\n";
    put_ints(o, inst.values);
    o << "target:\n" << num::to_string(inst.target) << "\n";
    return o.str();
}

std::string to_text(const lat::ModSubsetSumInstance& inst) {
    std::ostringstream o;
    head(o, Kind::mod_subsetsum);
    o << "n: " << inst.residues.size() << "\n";
    o << "q: " << num::to_string(inst.modulus) << "\nresidues:\n";
    put_ints(o, inst.residues);
    o << "target:\n" << num::to_string(inst.target) << "\n";
    return o.str();
}

std::string to_text(const lat::GapCvpInstance& inst) {
    std::ostringstream o;
    head(o, Kind::cvp);
    o << "n: " << inst.basis.rank_n() << "\nm: " << inst.basis.dim_m() << "\n";
    o << "p: " << inst.p << "\n";
    o << "d: " << num::to_string(inst.d) << "\n";
    o << "gamma: " << num::to_string(inst.gamma) << "\n";
    if (inst.promise_tau)
        o << "tau: " << num::to_string(*inst.promise_tau) << "\n";
    put_basis(o, inst.basis);
    o << "target:\n";
    for (size_t i = 0; i < inst.target.size(); ++i)
        o << num::to_string(inst.target[i]) << (i + 1 == inst.target.size() ? '\n' : ' ');
    return o.str();
}

std::string to_text(const lat::GapSvpInstance& inst) {
    std::ostringstream o;
    head(o, Kind::svp);
    o << "n: " << inst.basis.rank_n() << "\nm: " << inst.basis.dim_m() << "\n";
    o << "p: " << inst.p << "\n";
    o << "d: " << num::to_string(inst.d) << "\n";
    o << "gamma: " << num::to_string(inst.gamma) << "\n";
    put_basis(o, inst.basis);
    return o.str();
}

std::string to_text(const lat::RqCompressed& inst) {
    std::ostringstream o;
    put_compressed_body(o, inst);
    return o.str();
}

std::string to_text(const OrManifest& inst) {
    std::ostringstream o;
    head(o, Kind::or_manifest);
    o << "count: " << inst.members.size() << "\n";
    for (const auto& member : inst.members) {
        o << "member:\n";
        put_compressed_body(o, member);
    }
    return o.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream o;
    o << in.rdbuf();
    return o.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text).flush())
        throw Error("cannot write '" + path + "'");
}

namespace {

uint64_t bits_of(const std::vector<BigInt>& vs) {
    uint64_t b = 0;
    for (const BigInt& v : vs)
        b += num::bit_size(v);
    return b;
}

uint64_t bits_of(const std::vector<Rat>& vs) {
    uint64_t b = 0;
    for (const Rat& v : vs)
        b += num::bit_size(v);
    return b;
}

} // namespace

uint64_t payload_bits(const lat::SubsetSumInstance& inst) {
    return kHeaderChargeBits + bits_of(inst.values) + num::bit_size(inst.target);
}

uint64_t payload_bits(const lat::ModSubsetSumInstance& inst) {
    return kHeaderChargeBits + bits_of(inst.residues) + num::bit_size(inst.target) +
           num::bit_size(inst.modulus);
}

uint64_t payload_bits(const lat::GapCvpInstance& inst) {
    uint64_t b = kHeaderChargeBits + num::bit_size(inst.d) + num::bit_size(inst.gamma);
    if (inst.promise_tau)
        b += num::bit_size(*inst.promise_tau);
    for (const auto& col : inst.basis.cols)
        b += bits_of(col);
    return b + bits_of(inst.target);
}

uint64_t payload_bits(const lat::GapSvpInstance& inst) {
    uint64_t b = kHeaderChargeBits + num::bit_size(inst.d) + num::bit_size(inst.gamma);
    for (const auto& col : inst.basis.cols)
        b += bits_of(col);
    return b;
}

uint64_t payload_bits(const lat::RqCompressed& inst) {
    return kHeaderChargeBits + bits_of(inst.form.entries) + num::bit_size(inst.q) +
           num::bit_size(inst.r) + num::bit_size(inst.dpp);
}

uint64_t payload_bits(const OrManifest& inst) {
    uint64_t b = kHeaderChargeBits;
    for (const auto& member : inst.members)
        b += payload_bits(member);
    return b;
}

uint64_t payload_bits(const AnyInstance& inst) {
    switch (inst.kind) {
    case Kind::subsetsum: return payload_bits(*inst.subsetsum);
    case Kind::mod_subsetsum: return payload_bits(*inst.mod_subsetsum);
    case Kind::cvp: return payload_bits(*inst.cvp);
    case Kind::svp: return payload_bits(*inst.svp);
    case Kind::ip:
    case Kind::mvp: return payload_bits(*inst.compressed);
    case Kind::or_manifest: return payload_bits(*inst.manifest);
    }
    throw DomainError("unknown kind");
}

std::string to_text(const AnyInstance& inst) {
    switch (inst.kind) {
    case Kind::subsetsum: return to_text(*inst.subsetsum);
    case Kind::mod_subsetsum: return to_text(*inst.mod_subsetsum);
    case Kind::cvp: return to_text(*inst.cvp);
    case Kind::svp: return to_text(*inst.svp);
    case Kind::ip:
    case Kind::mvp: return to_text(*inst.compressed);
    case Kind::or_manifest: return to_text(*inst.manifest);
    }
    throw DomainError("unknown kind");
}

} // namespace latcomp::io
