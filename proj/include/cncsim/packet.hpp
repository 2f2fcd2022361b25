#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cncsim/field.hpp"
#include "cncsim/rng.hpp"

namespace cncsim {

// A block of m original packets, stored as GF(2^q) symbols.
//
// Packets of payload_bits bits are split into ceil(payload_bits / q) symbols,
// bits packed big-endian; padding_bits records the zero fill in the last
// symbol so byte payloads round-trip for any q.
struct SourceBlock {
    std::size_t m = 0;
    unsigned q = 8;
    std::size_t payload_bits = 0;
    unsigned padding_bits = 0;
    std::vector<std::vector<Symbol>> packets;

    std::size_t symbols_per_packet() const {
        return (payload_bits + q - 1) / q;
    }

    static SourceBlock random(std::size_t m, std::size_t payload_bits,
                              const GaloisField& field, RandomStream& rng);
    static SourceBlock from_bytes(const std::vector<std::vector<std::uint8_t>>& packets,
                                  unsigned q);
};

// One combination packet: the coding vector travels in the header, the
// payload is the coefficient-weighted sum of the original packets.
struct CodedPacket {
    std::vector<Symbol> coding_vector;
    std::vector<Symbol> payload;
    int hop_index = 0; // cluster where last recoded; 0 = source

    bool operator==(const CodedPacket&) const = default;
};

// Stack of coding vectors; m kept explicit so empty stacks stay well-formed.
struct CoefficientMatrix {
    std::size_t m = 0;
    std::vector<std::vector<Symbol>> rows;

    void add_row(const std::vector<Symbol>& row) { rows.push_back(row); }
    std::size_t row_count() const { return rows.size(); }
};

// Big-endian bit packing between byte payloads and q-bit symbols.
std::vector<Symbol> pack_bits(const std::vector<std::uint8_t>& bytes, unsigned q);
std::vector<std::uint8_t> unpack_bits(const std::vector<Symbol>& symbols, unsigned q,
                                      std::size_t n_bytes);

} // namespace cncsim
