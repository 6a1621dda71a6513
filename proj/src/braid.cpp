#include "qlab/braid.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

std::vector<int> parse_letter_list(const std::string& text) {
    size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (i >= text.size() || text[i] != '[') throw ParseError("braid word must start with '['");
    ++i;
    std::vector<int> letters;
    skip_space();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_space();
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
                throw ParseError("expected integer in braid word");
            letters.push_back(std::stoi(text.substr(start, i - start)));
            skip_space();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ']' in braid word");
        }
    }
    skip_space();
    if (i != text.size()) throw ParseError("trailing characters after braid word");
    return letters;
}

void validate_letters(const BraidWord& w) {
    for (int a : w.letters) {
        if (a == 0) throw ZeroLetter("braid letter 0 is not a generator");
        if (std::abs(a) > w.strands - 1)
            throw LetterOutOfRange("letter " + std::to_string(a) + " needs more than " +
                                   std::to_string(w.strands) + " strands");
    }
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
    BraidWord w;
    w.letters = parse_letter_list(text);
    int widest = 0;
    for (int a : w.letters) widest = std::max(widest, std::abs(a));
    w.strands = widest + 1;
    validate_letters(w);
    return w;
}

BraidWord parse_braid(const std::string& text, int strands) {
    if (strands < 1) throw ParseError("strand count must be at least 1");
    BraidWord w;
    w.strands = strands;
    w.letters = parse_letter_list(text);
    validate_letters(w);
    return w;
}

std::string format_braid(const BraidWord& w) {
    std::string out = "[";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.letters[i]);
    }
    return out + "]";
}

Perm closure_permutation(const BraidWord& w) {
    Perm p = perm_identity(w.strands);  // p[i]: current position of the strand entering at top i
    for (int a : w.letters) {
        int k = std::abs(a) - 1;
        for (int i = 0; i < w.strands; ++i) {
            if (p[i] == k)
                p[i] = k + 1;
            else if (p[i] == k + 1)
                p[i] = k;
        }
    }
    return p;
}

bool is_knot(const BraidWord& w) {
    Perm p = closure_permutation(w);
    int len = 1, at = p[0];
    while (at != 0) {
        at = p[at];
        ++len;
    }
    return len == w.strands;
}

BraidWord unknot() {
    return BraidWord{1, {}};
}

BraidWord connect_sum(const BraidWord& w1, const BraidWord& w2) {
    if (!is_knot(w1) || !is_knot(w2)) throw NotAKnot("connected sum needs knot closures");
    BraidWord out;
    out.strands = w1.strands + w2.strands - 1;
    out.letters = w1.letters;
    const int shift = w1.strands - 1;
    for (int b : w2.letters) out.letters.push_back(b > 0 ? b + shift : b - shift);
    return out;
}

BraidWord mirror(const BraidWord& w) {
    BraidWord out = w;
    for (int& a : out.letters) a = -a;
    return out;
}

BraidWord reverse(const BraidWord& w) {
    BraidWord out = w;
    std::reverse(out.letters.begin(), out.letters.end());
    return out;
}

BraidWord reverse_mirror(const BraidWord& w) {
    return reverse(mirror(w));
}

BraidWord torus_braid(int p, int q) {
    if (p < 1 || q < 1) throw InvalidParameter("torus parameters must be positive");
    if (std::gcd(p, q) != 1) throw NotCoprime("torus braid needs coprime parameters");
    BraidWord w;
    w.strands = p;
    for (int rep = 0; rep < q; ++rep)
        for (int k = 1; k < p; ++k) w.letters.push_back(k);
    return w;
}

std::vector<KnotEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open catalog file " + path);
    std::vector<KnotEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string note;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            note = line.substr(hash + 1);
            size_t b = note.find_first_not_of(" \t");
            note = b == std::string::npos ? "" : note.substr(b, note.find_last_not_of(" \t") - b + 1);
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) continue;  // blank or comment-only line
        int strands = 0;
        if (!(ls >> strands))
            throw ParseError("line " + std::to_string(lineno) + ": expected strand count");
        std::string rest;
        std::getline(ls, rest);
        BraidWord w = parse_braid(rest, strands);
        if (!is_knot(w)) throw NotAKnot(name);
        out.push_back(KnotEntry{std::move(name), std::move(w), std::move(note)});
    }
    return out;
}

}  // namespace qlab
