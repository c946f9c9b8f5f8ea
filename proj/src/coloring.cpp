#include "tricolor/coloring.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>

namespace tricolor {

int bits_for_colors(int q) {
    int b = 1;
    while ((1 << b) < q) ++b;
    return b;
}

Coloring::Coloring(std::shared_ptr<const Lattice> lattice, int q) : lattice_(std::move(lattice)), q_(q) {
    require(lattice_ != nullptr, "colouring needs a lattice");
    require(q >= 1 && q <= 16, "number of colours q must lie in [1, 16]");
    bits_ = bits_for_colors(q);
    per_word_ = 64 / bits_;
    words_.assign((static_cast<std::size_t>(lattice_->size()) + per_word_ - 1) / per_word_, 0);
}

Coloring::Coloring(std::shared_ptr<const Lattice> lattice, int q, std::span<const std::uint8_t> colors)
    : Coloring(std::move(lattice), q) {
    require(static_cast<int>(colors.size()) == size(), "colour vector length does not match the lattice");
    for (Vertex v = 0; v < size(); ++v) {
        require(colors[v] < q, "colour out of range");
        set(v, colors[v]);
    }
}

std::vector<std::uint8_t> Coloring::colors() const {
    std::vector<std::uint8_t> out(size());
    for (Vertex v = 0; v < size(); ++v) out[v] = static_cast<std::uint8_t>((*this)[v]);
    return out;
}

bool is_proper(const Coloring& chi) {
    for (const Edge& e : chi.lattice().edges())
        if (chi[e.u] == chi[e.v]) return false;
    return true;
}

VertexSet zero_set(const Coloring& chi) {
    require(is_proper(chi), "zero_set requires a proper colouring");
    VertexSet out(chi.size());
    for (Vertex v = 0; v < chi.size(); ++v)
        if (chi[v] == 0) out.insert(v);
    return out;
}

ImbalanceStats imbalance_stats(const Coloring& chi) {
    ImbalanceStats st;
    const Lattice& lat = chi.lattice();
    for (Vertex v = 0; v < chi.size(); ++v) {
        if (chi[v] != 0) continue;
        (lat.is_even(v) ? st.zero_even : st.zero_odd) += 1;
    }
    return st;
}

const char* to_string(ImbalanceClass c) {
    switch (c) {
    case ImbalanceClass::Balanced: return "balanced";
    case ImbalanceClass::EvenHeavy: return "even";
    case ImbalanceClass::OddHeavy: return "odd";
    }
    return "?";
}

Rational default_rho() { return Rational(11, 50); }

ImbalanceClass classify(int imbalance, const Rational& rho, long long volume) {
    require(rho > 0 && rho <= 1, "rho must lie in (0, 1]");
    // |imbalance| > rho * volume / 2  <=>  2 |imbalance| den > num volume
    const BigInt num = boost::multiprecision::numerator(rho);
    const BigInt den = boost::multiprecision::denominator(rho);
    const BigInt lhs = BigInt(2) * std::abs(imbalance) * den;
    const BigInt rhs = num * volume;
    if (lhs <= rhs) return ImbalanceClass::Balanced;
    return imbalance > 0 ? ImbalanceClass::EvenHeavy : ImbalanceClass::OddHeavy;
}

ImbalanceClass classify(const Coloring& chi, const Rational& rho) {
    require(chi.lattice().is_torus(), "imbalance classes are defined on tori");
    return classify(imbalance(chi), rho, chi.size());
}

int hamming_distance(const Coloring& a, const Coloring& b) {
    require(a.lattice().spec() == b.lattice().spec(), "colourings over different lattices");
    int k = 0;
    for (Vertex v = 0; v < a.size(); ++v) k += a[v] != b[v] ? 1 : 0;
    return k;
}

// ---------------------------------------------------------------- boundary conditions

BoundaryCondition BoundaryCondition::odd_boundary_with_center(const Lattice& lattice, Vertex v0) {
    require(lattice.kind() == LatticeKind::Box, "C_3^O(v0) is defined on boxes");
    require(v0 >= 0 && v0 < lattice.size(), "v0 out of range");
    require(lattice.is_even(v0), "v0 must be an even vertex");
    require(!lattice.outer_boundary().contains(v0), "v0 must not lie on the box boundary");
    return {OddBoundaryZero{}, PinnedVertex{v0, 0}};
}

BoundaryCondition& BoundaryCondition::operator+=(const BoundaryCondition& other) {
    clauses_.insert(clauses_.end(), other.clauses_.begin(), other.clauses_.end());
    return *this;
}

void BoundaryCondition::check_applicable(const Lattice& lattice, int q) const {
    for (const auto& clause : clauses_) {
        if (std::holds_alternative<OddBoundaryZero>(clause) || std::holds_alternative<EvenBoundaryZero>(clause)) {
            require(lattice.kind() == LatticeKind::Box, "boundary-zero conditions need a box lattice (torus has no boundary)");
        } else {
            const auto& pin = std::get<PinnedVertex>(clause);
            require(pin.vertex >= 0 && pin.vertex < lattice.size(), "pinned vertex out of range");
            require(pin.color >= 0 && pin.color < q, "pinned colour out of range");
        }
    }
}

std::optional<std::vector<int>> BoundaryCondition::pins(const Lattice& lattice, int q) const {
    check_applicable(lattice, q);
    std::vector<int> pin(lattice.size(), -1);
    bool ok = true;
    auto put = [&](Vertex v, int c) {
        if (pin[v] >= 0 && pin[v] != c) ok = false;
        pin[v] = c;
    };
    for (const auto& clause : clauses_) {
        if (std::holds_alternative<PinnedVertex>(clause)) {
            const auto& p = std::get<PinnedVertex>(clause);
            put(p.vertex, p.color);
            continue;
        }
        const Parity side = std::holds_alternative<OddBoundaryZero>(clause) ? Parity::Odd : Parity::Even;
        lattice.outer_boundary().for_each([&](Vertex v) {
            if (lattice.parity(v) == side) put(v, 0);
        });
    }
    if (!ok) return std::nullopt;
    return pin;
}

std::string BoundaryCondition::describe() const {
    if (clauses_.empty()) return "none";
    std::string out;
    for (const auto& clause : clauses_) {
        if (!out.empty()) out += "+";
        if (std::holds_alternative<OddBoundaryZero>(clause)) out += "odd-boundary-zero";
        else if (std::holds_alternative<EvenBoundaryZero>(clause)) out += "even-boundary-zero";
        else {
            const auto& p = std::get<PinnedVertex>(clause);
            out += "pin(" + std::to_string(p.vertex) + "=" + std::to_string(p.color) + ")";
        }
    }
    return out;
}

bool satisfies_bc(const Coloring& chi, const BoundaryCondition& bc) {
    auto pin = bc.pins(chi.lattice(), chi.q());
    if (!pin) return false;
    for (Vertex v = 0; v < chi.size(); ++v)
        if ((*pin)[v] >= 0 && chi[v] != (*pin)[v]) return false;
    return true;
}

Coloring phase_coloring(std::shared_ptr<const Lattice> lattice, Parity zero_side, int other_color, int q) {
    require(other_color > 0 && other_color < q, "phase colour must be a nonzero colour");
    Coloring chi(std::move(lattice), q);
    for (Vertex v = 0; v < chi.size(); ++v) chi.set(v, chi.lattice().parity(v) == zero_side ? 0 : other_color);
    return chi;
}

// ---------------------------------------------------------------- base64

namespace {

constexpr char kAlphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int decode_char(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
}

}  // namespace

std::string base64_encode(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    for (; i + 3 <= bytes.size(); i += 3) {
        const std::uint32_t x = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
        out += kAlphabet[(x >> 18) & 63];
        out += kAlphabet[(x >> 12) & 63];
        out += kAlphabet[(x >> 6) & 63];
        out += kAlphabet[x & 63];
    }
    const std::size_t rest = bytes.size() - i;
    if (rest == 1) {
        const std::uint32_t x = bytes[i] << 16;
        out += kAlphabet[(x >> 18) & 63];
        out += kAlphabet[(x >> 12) & 63];
        out += "==";
    } else if (rest == 2) {
        const std::uint32_t x = (bytes[i] << 16) | (bytes[i + 1] << 8);
        out += kAlphabet[(x >> 18) & 63];
        out += kAlphabet[(x >> 12) & 63];
        out += kAlphabet[(x >> 6) & 63];
        out += '=';
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.size() % 4 != 0) fail(ErrorCode::MalformedPayload, "base64 payload length is not a multiple of 4");
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int vals[4];
        int pad = 0;
        for (int k = 0; k < 4; ++k) {
            const char c = text[i + k];
            if (c == '=' && i + 4 == text.size() && k >= 2) {
                vals[k] = 0;
                ++pad;
                continue;
            }
            if (pad > 0 || (vals[k] = decode_char(c)) < 0)
                fail(ErrorCode::MalformedPayload, "invalid base64 character in payload");
        }
        const std::uint32_t x = (vals[0] << 18) | (vals[1] << 12) | (vals[2] << 6) | vals[3];
        out.push_back(static_cast<std::uint8_t>(x >> 16));
        if (pad < 2) out.push_back(static_cast<std::uint8_t>(x >> 8));
        if (pad < 1) out.push_back(static_cast<std::uint8_t>(x));
    }
    return out;
}

// ---------------------------------------------------------------- file format

std::string serialize(const Coloring& chi) {
    const LatticeSpec& spec = chi.lattice().spec();
    nlohmann::ordered_json header;
    header["kind"] = spec.kind == LatticeKind::Torus ? "torus" : "box";
    header["d"] = spec.d;
    header["n"] = spec.n;
    header["q"] = chi.q();
    if (spec.extended) header["extended"] = true;

    const int b = chi.bits_per_vertex();
    const std::size_t total_bits = static_cast<std::size_t>(chi.size()) * b;
    std::vector<std::uint8_t> bytes((total_bits + 7) / 8, 0);
    for (Vertex v = 0; v < chi.size(); ++v) {
        const unsigned c = static_cast<unsigned>(chi[v]);
        for (int k = 0; k < b; ++k) {
            const std::size_t bit = static_cast<std::size_t>(v) * b + k;
            if ((c >> k) & 1u) bytes[bit / 8] |= static_cast<std::uint8_t>(1u << (bit % 8));
        }
    }
    return header.dump() + "\n" + base64_encode(bytes) + "\n";
}

Coloring deserialize(std::string_view text) {
    const auto newline = text.find('\n');
    if (newline == std::string_view::npos) fail(ErrorCode::MalformedHeader, "missing header line");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(text.substr(0, newline));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::MalformedHeader, std::string("header is not JSON: ") + e.what());
    }
    LatticeSpec spec;
    int q = 0;
    try {
        const std::string kind = header.at("kind").get<std::string>();
        if (kind != "torus" && kind != "box") fail(ErrorCode::MalformedHeader, "unknown lattice kind '" + kind + "'");
        spec.kind = kind == "torus" ? LatticeKind::Torus : LatticeKind::Box;
        spec.d = header.at("d").get<int>();
        spec.n = header.at("n").get<int>();
        q = header.at("q").get<int>();
        spec.extended = header.value("extended", false);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::MalformedHeader, std::string("header field missing or mistyped: ") + e.what());
    }
    if (q < 1 || q > 16) fail(ErrorCode::MalformedHeader, "header q out of range");
    std::shared_ptr<const Lattice> lattice;
    try {
        lattice = Lattice::make(spec);
    } catch (const Error& e) {
        fail(ErrorCode::MalformedHeader, std::string("header describes an invalid lattice: ") + e.what());
    }

    const std::vector<std::uint8_t> bytes = base64_decode(text.substr(newline + 1));
    const int b = bits_for_colors(q);
    const std::size_t total_bits = static_cast<std::size_t>(lattice->size()) * b;
    if (bytes.size() != (total_bits + 7) / 8)
        fail(ErrorCode::WrongLength, "payload has " + std::to_string(bytes.size()) + " bytes, expected " +
                                         std::to_string((total_bits + 7) / 8));
    Coloring chi(lattice, q);
    for (Vertex v = 0; v < lattice->size(); ++v) {
        unsigned c = 0;
        for (int k = 0; k < b; ++k) {
            const std::size_t bit = static_cast<std::size_t>(v) * b + k;
            c |= ((bytes[bit / 8] >> (bit % 8)) & 1u) << k;
        }
        if (static_cast<int>(c) >= q)
            fail(ErrorCode::ColorOutOfRange, "vertex " + std::to_string(v) + " has colour " + std::to_string(c) +
                                                 " but q=" + std::to_string(q));
        chi.set(v, static_cast<int>(c));
    }
    return chi;
}

}  // namespace tricolor
