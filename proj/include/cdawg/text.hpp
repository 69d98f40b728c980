#pragma once

#include <string>
#include <string_view>

namespace cdawg {

// A text under edit. Bytes are the alphabet; positions are 1-based and
// substring ranges [i..j] are inclusive on both ends.
struct Text {
    std::string bytes;

    Text() = default;
    explicit Text(std::string b) : bytes(std::move(b)) {}
    explicit Text(std::string_view b) : bytes(b) {}
    explicit Text(const char* b) : bytes(b) {}

    int size() const { return static_cast<int>(bytes.size()); }
    bool empty() const { return bytes.empty(); }

    // T[i], 1 <= i <= size()
    unsigned char at(int i) const { return static_cast<unsigned char>(bytes[static_cast<size_t>(i) - 1]); }

    // T[i..j]; empty when i > j
    std::string_view slice(int i, int j) const {
        if (i > j) return {};
        return std::string_view(bytes).substr(static_cast<size_t>(i) - 1, static_cast<size_t>(j - i) + 1);
    }

    // distinct bytes, sorted
    std::string alphabet() const;
    int sigma() const { return static_cast<int>(alphabet().size()); }
    bool unary() const { return !empty() && sigma() == 1; }

    bool operator==(const Text&) const = default;
};

} // namespace cdawg
