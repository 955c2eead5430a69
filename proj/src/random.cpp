#include "ssmid/random.hpp"

namespace ssmid {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view component, std::uint64_t index) {
    std::uint64_t s = splitmix64(master);
    s = splitmix64(s ^ fnv1a(component));
    return splitmix64(s ^ index);
}

Rng make_stream(std::uint64_t master, std::string_view component, std::uint64_t index) {
    return Rng(derive_seed(master, component, index));
}

}  // namespace ssmid
