#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "designs.hpp"
#include "latin.hpp"
#include "mds.hpp"
#include "sqs.hpp"

namespace mdskit {

// Parse failure with a 1-based source line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& msg)
        : std::runtime_error("line " + std::to_string(ln) + ": " + msg), line(ln) {}
};

namespace detail {

// whitespace tokenizer that remembers line numbers
class Tokens {
  public:
    explicit Tokens(std::istream& in) : in_(in) {}

    int line() const { return lineno_; }

    bool next(std::string& tok) {
        if (pushed_) {
            tok = push_;
            pushed_ = false;
            return true;
        }
        while (idx_ >= toks_.size()) {
            std::string ln;
            if (!std::getline(in_, ln)) return false;
            ++lineno_;
            toks_.clear();
            idx_ = 0;
            std::istringstream ss(ln);
            std::string t;
            while (ss >> t) toks_.push_back(t);
        }
        tok = toks_[idx_++];
        return true;
    }

    void push(const std::string& t) {
        push_ = t;
        pushed_ = true;
    }

    std::string want(const std::string& what) {
        std::string t;
        if (!next(t)) throw ParseError(lineno_ + 1, "expected " + what + ", got end of file");
        return t;
    }

    long long want_int(const std::string& what) {
        std::string t = want(what);
        size_t used = 0;
        long long x = 0;
        bool ok = true;
        try {
            x = std::stoll(t, &used);
        } catch (...) {
            ok = false;
        }
        if (!ok || used != t.size())
            throw ParseError(lineno_, "expected " + what + ", got '" + t + "'");
        return x;
    }

    long long want_int_in(const std::string& what, long long lo, long long hi) {
        long long x = want_int(what);
        if (x < lo || x > hi)
            throw ParseError(lineno_, what + " = " + std::to_string(x) + " out of range [" +
                                          std::to_string(lo) + "," + std::to_string(hi) + "]");
        return x;
    }

    void want_keyword(const std::string& kw) {
        std::string t = want("'" + kw + "'");
        if (t != kw) throw ParseError(lineno_, "expected '" + kw + "', got '" + t + "'");
    }

    void want_eof() {
        std::string t;
        if (next(t)) throw ParseError(lineno_, "unexpected trailing content '" + t + "'");
    }

  private:
    std::istream& in_;
    std::vector<std::string> toks_;
    size_t idx_ = 0;
    int lineno_ = 0;
    std::string push_;
    bool pushed_ = false;
};

} // namespace detail

// ------------------------------------------------------------- LATIN
// LATIN <d0> <q> followed by q^d0 symbols, last coordinate fastest,
// q symbols per line.

inline void write_latin(std::ostream& os, const LatinHypercube& L) {
    os << "LATIN " << L.d0 << ' ' << L.q << '\n';
    for (size_t i = 0; i < L.cells.size(); ++i) {
        os << L.cells[i];
        os << ((i + 1) % size_t(L.q) == 0 ? '\n' : ' ');
    }
}

inline LatinHypercube read_latin(std::istream& is) {
    detail::Tokens tk(is);
    tk.want_keyword("LATIN");
    int d0 = int(tk.want_int_in("d0", 1, 16));
    int q = int(tk.want_int_in("q", 1, 1 << 16));
    uint64_t cells = 1;
    for (int i = 0; i < d0; ++i) {
        cells *= uint64_t(q);
        if (cells > (uint64_t(1) << 26)) throw ParseError(tk.line(), "hypercube too large");
    }
    LatinHypercube L;
    L.d0 = d0;
    L.q = q;
    L.cells.resize(size_t(cells));
    for (uint64_t i = 0; i < cells; ++i)
        L.cells[size_t(i)] = uint16_t(tk.want_int_in("symbol", 0, q - 1));
    tk.want_eof();
    return L;
}

// -------------------------------------------------------------- CODE
// CODE <d> <q> <rho>, an optional LINEAR <p> <k> header followed by an
// m x d generator matrix, then one word per line.

inline void write_code(std::ostream& os, const Code& c) {
    os << "CODE " << c.d << ' ' << c.q << ' ' << c.rho << '\n';
    if (c.linear) {
        os << "LINEAR " << c.linear->p << ' ' << c.linear->k << '\n';
        for (int r = 0; r < c.m(); ++r) {
            for (int j = 0; j < c.d; ++j)
                os << c.linear->gen[size_t(r) * c.d + j] << (j + 1 == c.d ? '\n' : ' ');
        }
    }
    for (size_t i = 0; i < c.size(); ++i) {
        auto w = c.word(i);
        for (int j = 0; j < c.d; ++j) os << w[j] << (j + 1 == c.d ? '\n' : ' ');
    }
}

inline Code read_code(std::istream& is) {
    detail::Tokens tk(is);
    tk.want_keyword("CODE");
    int d = int(tk.want_int_in("d", 1, 64));
    int q = int(tk.want_int_in("q", 1, 1 << 16));
    int rho = int(tk.want_int_in("rho", 1, d));
    std::optional<Code::LinearForm> linear;
    std::string t;
    if (tk.next(t)) {
        if (t == "LINEAR") {
            Code::LinearForm lf;
            lf.p = uint32_t(tk.want_int_in("p", 2, 1 << 16));
            lf.k = uint32_t(tk.want_int_in("k", 1, 20));
            int m = d - rho + 1;
            lf.gen.resize(size_t(m) * d);
            for (auto& g : lf.gen) g = uint32_t(tk.want_int_in("generator entry", 0, q - 1));
            lf.prime_coeffs = true;
            for (uint32_t g : lf.gen)
                if (g >= lf.p) lf.prime_coeffs = false;
            linear = std::move(lf);
        } else {
            tk.push(t);
        }
    }
    std::vector<uint16_t> words;
    while (tk.next(t)) {
        tk.push(t);
        for (int j = 0; j < d; ++j) words.push_back(uint16_t(tk.want_int_in("symbol", 0, q - 1)));
        if (words.size() > (size_t(1) << 26)) throw ParseError(tk.line(), "too many words");
    }
    Code c;
    try {
        c = make_code(d, q, rho, std::move(words));
    } catch (const std::invalid_argument& e) {
        throw ParseError(tk.line(), e.what());
    }
    c.linear = std::move(linear);
    return c;
}

// --------------------------------------------------------------- BBD
// BBD <n>, G1 and G2 lines listing the two groups, then 4 ids per line.

inline void write_bbd(std::ostream& os, const BBD& b) {
    os << "BBD " << b.n << '\n';
    os << "G1";
    for (int id : b.g1) os << ' ' << id;
    os << "\nG2";
    for (int id : b.g2) os << ' ' << id;
    os << '\n';
    for (size_t i = 0; i + 4 <= b.blocks.size(); i += 4)
        os << b.blocks[i] << ' ' << b.blocks[i + 1] << ' ' << b.blocks[i + 2] << ' '
           << b.blocks[i + 3] << '\n';
}

inline BBD read_bbd(std::istream& is) {
    detail::Tokens tk(is);
    tk.want_keyword("BBD");
    int n = int(tk.want_int_in("n", 2, 1 << 20));
    if (n % 2) throw ParseError(tk.line(), "n must be even");
    BBD b;
    b.n = n;
    tk.want_keyword("G1");
    for (int i = 0; i < n / 2; ++i) b.g1.push_back(int(tk.want_int_in("group id", 0, n - 1)));
    tk.want_keyword("G2");
    for (int i = 0; i < n / 2; ++i) b.g2.push_back(int(tk.want_int_in("group id", 0, n - 1)));
    std::string t;
    while (tk.next(t)) {
        tk.push(t);
        for (int j = 0; j < 4; ++j) b.blocks.push_back(int(tk.want_int_in("point id", 0, n - 1)));
        if (b.blocks.size() > (size_t(1) << 28)) throw ParseError(tk.line(), "too many blocks");
    }
    return b;
}

// --------------------------------------------------------------- SQS
// SQS <v> <blockcount>, then exactly blockcount lines of 4 ids.

inline void write_sqs(std::ostream& os, const SQS& s) {
    os << "SQS " << s.v << ' ' << s.block_count() << '\n';
    for (size_t i = 0; i + 4 <= s.blocks.size(); i += 4)
        os << s.blocks[i] << ' ' << s.blocks[i + 1] << ' ' << s.blocks[i + 2] << ' '
           << s.blocks[i + 3] << '\n';
}

inline SQS read_sqs(std::istream& is) {
    detail::Tokens tk(is);
    tk.want_keyword("SQS");
    int v = int(tk.want_int_in("v", 4, 1 << 20));
    long long bc = tk.want_int_in("block count", 0, 1ll << 26);
    SQS s;
    s.v = v;
    s.blocks.reserve(size_t(bc) * 4);
    for (long long i = 0; i < bc * 4; ++i)
        s.blocks.push_back(int(tk.want_int_in("point id", 0, v - 1)));
    tk.want_eof();
    return s;
}

// ------------------------------------------------------- file helpers

enum class FileKind { latin, code, bbd, sqs };

inline FileKind sniff(std::istream& is) {
    detail::Tokens tk(is);
    std::string t = tk.want("a format keyword");
    if (t == "LATIN") return FileKind::latin;
    if (t == "CODE") return FileKind::code;
    if (t == "BBD") return FileKind::bbd;
    if (t == "SQS") return FileKind::sqs;
    throw ParseError(tk.line(), "unknown format keyword '" + t + "'");
}

namespace detail {
inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}
template <class T, class Fn> void save_file(const std::string& path, const T& obj, Fn&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    writer(out, obj);
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}
} // namespace detail

inline FileKind sniff_file(const std::string& path) {
    auto in = detail::open_in(path);
    return sniff(in);
}
inline LatinHypercube read_latin_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_latin(in);
}
inline Code read_code_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_code(in);
}
inline BBD read_bbd_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_bbd(in);
}
inline SQS read_sqs_file(const std::string& path) {
    auto in = detail::open_in(path);
    return read_sqs(in);
}
inline void write_latin_file(const std::string& path, const LatinHypercube& L) {
    detail::save_file(path, L, [](std::ostream& os, const LatinHypercube& x) { write_latin(os, x); });
}
inline void write_code_file(const std::string& path, const Code& c) {
    detail::save_file(path, c, [](std::ostream& os, const Code& x) { write_code(os, x); });
}
inline void write_bbd_file(const std::string& path, const BBD& b) {
    detail::save_file(path, b, [](std::ostream& os, const BBD& x) { write_bbd(os, x); });
}
inline void write_sqs_file(const std::string& path, const SQS& s) {
    detail::save_file(path, s, [](std::ostream& os, const SQS& x) { write_sqs(os, x); });
}

} // namespace mdskit
