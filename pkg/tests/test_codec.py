from unittest import TestCase, main

import numpy as np
from rlnc import CodecError
from rlnc.codec import (
    CodedPacket,
    Encoder,
    GenerationParams,
    LocalCoefficients,
    SourcePacket,
    desymbolize,
    encode,
    full_rank_probability,
    join_payload,
    random_coefficients,
    recode,
    split_payload,
    symbolize,
)
from rlnc.galois import field_new
from zenlib.logging import loggify


def matrix_product(w, rows, field) -> list[int]:
    """Row vector times matrix, one scalar multiplication at a time."""
    out = [0] * len(rows[0])
    for weight, row in zip(w, rows):
        for k, value in enumerate(row):
            out[k] ^= field.mul(int(weight), int(value))
    return out


@loggify
class TestCodec(TestCase):
    def field(self, s, table_mode=False):
        return field_new(s, table_mode=table_mode, logger=self.logger)

    def originals(self, field, n, m, seed=0):
        rng = np.random.default_rng(seed)
        return [SourcePacket(payload) for payload in rng.integers(0, field.order, size=(n, m))]

    def test_generation_params(self):
        gf8, gf16 = self.field(8), self.field(16)
        self.assertEqual(GenerationParams.from_packet_size(4, 10, gf8).m, 10)
        self.assertEqual(GenerationParams.from_packet_size(4, 10, gf16).m, 5)
        self.assertEqual(GenerationParams.from_packet_size(4, 3, self.field(16)).m, 2)
        self.assertEqual(GenerationParams(2, 5, gf16).packet_bytes, 10)
        with self.assertRaises(CodecError):
            GenerationParams(0, 4, gf8)
        with self.assertRaises(CodecError):
            GenerationParams(4, 0, gf8)

    def test_symbolize(self):
        packet = symbolize(b"\xff", GenerationParams(1, 4, self.field(4)))
        self.assertEqual(packet.payload.tolist(), [15, 15, 0, 0])
        self.assertEqual(packet.pad_count, 2)

        packet = symbolize(bytes([0b10110011]), GenerationParams(1, 8, self.field(1)))
        self.assertEqual(packet.payload.tolist(), [1, 0, 1, 1, 0, 0, 1, 1])
        self.assertEqual(packet.pad_count, 0)

        packet = symbolize(b"\x12\x34\x56", GenerationParams(1, 2, self.field(16)))
        self.assertEqual(packet.payload.tolist(), [0x1234, 0x5600])

    def test_symbolize_empty(self):
        for s in (1, 8, 16):
            packet = symbolize(b"", GenerationParams(1, 6, self.field(s)))
            self.assertEqual(packet.payload.tolist(), [0] * 6)
            self.assertEqual(packet.pad_count, 6)

    def test_symbolize_too_long(self):
        with self.assertRaises(CodecError):
            symbolize(b"\x01\x02\x03", GenerationParams(1, 4, self.field(4)))

    def test_desymbolize(self):
        rng = np.random.default_rng(1)
        for s in (1, 2, 4, 8, 16):
            data = rng.bytes(13)
            params = GenerationParams.from_packet_size(1, len(data), self.field(s))
            self.assertEqual(desymbolize(symbolize(data, params).payload, len(data), s), data)

    def test_split_join_payload(self):
        rng = np.random.default_rng(2)
        for s, n, length in ((1, 3, 7), (4, 4, 33), (8, 16, 1000), (16, 5, 1)):
            data = rng.bytes(length)
            params, packets = split_payload(data, n, self.field(s))
            self.assertEqual(len(packets), n)
            self.assertTrue(all(len(packet.payload) == params.m for packet in packets))
            self.assertEqual(join_payload([packet.payload for packet in packets], params, length), data)

    def test_encode_unit_vector(self):
        field = self.field(8)
        originals = self.originals(field, 4, 6)
        for i in range(4):
            coeffs = [0] * 4
            coeffs[i] = 1
            packet = encode(originals, coeffs, field)
            self.assertEqual(packet.payload.tolist(), originals[i].payload.tolist())
            self.assertEqual(packet.encoding_vector.tolist(), coeffs)

    def test_encode_gf2_xor(self):
        field = self.field(1)
        originals = self.originals(field, 5, 16)
        packet = encode(originals, [0, 1, 0, 0, 1], field)
        self.assertEqual(packet.payload.tolist(), (originals[1].payload ^ originals[4].payload).tolist())

    def test_encode_cancellation(self):
        field = self.field(8)
        packet = encode([SourcePacket([10]), SourcePacket([41])], [41, 10], field)
        self.assertEqual(packet.payload.tolist(), [0])
        self.assertEqual(packet.encoding_vector.tolist(), [41, 10])

    def test_encode_symbolwise(self):
        field = self.field(4)
        originals = self.originals(field, 3, 5, seed=3)
        coeffs = [3, 0, 7]
        packet = encode(originals, coeffs, field)
        expected = matrix_product(coeffs, [original.payload.tolist() for original in originals], field)
        self.assertEqual(packet.payload.tolist(), expected)

    def test_encode_errors(self):
        field = self.field(8)
        originals = self.originals(field, 3, 4)
        with self.assertRaises(CodecError):
            encode(originals, [0, 0, 0], field)
        with self.assertRaises(CodecError):
            encode(originals, [1, 2], field)
        with self.assertRaises(CodecError):
            encode([SourcePacket([1, 2]), SourcePacket([1])], [1, 1], field)

    def test_random_coefficients(self):
        gf2, gf8 = self.field(1), self.field(8)
        rng = np.random.default_rng(4)
        for _ in range(50):
            self.assertEqual(random_coefficients(1, gf2, rng).tolist(), [1])

        first = random_coefficients(8, gf8, np.random.default_rng(9))
        second = random_coefficients(8, gf8, np.random.default_rng(9))
        self.assertEqual(first.tolist(), second.tolist())

        draws = np.array([random_coefficients(4, gf8, rng) for _ in range(10000)], dtype=float)
        sigma = np.sqrt((256**2 - 1) / 12) / np.sqrt(len(draws))
        for mean in draws.mean(axis=0):
            self.assertLess(abs(mean - 127.5), 3 * sigma)

        with self.assertRaises(CodecError):
            random_coefficients(0, gf8, rng)

    def test_local_coefficients(self):
        self.assertEqual(LocalCoefficients([0, 3]).r, 2)
        with self.assertRaises(CodecError):
            LocalCoefficients([0, 0])
        with self.assertRaises(CodecError):
            LocalCoefficients([])

    def test_recode_identity(self):
        field = self.field(8)
        packet = encode(self.originals(field, 3, 4), [5, 6, 7], field)
        self.assertEqual(recode([packet], LocalCoefficients([1]), field), packet)

    def test_recode_unit_rows(self):
        field = self.field(1)
        originals = self.originals(field, 4, 8, seed=5)
        received = [encode(originals, [1, 0, 0, 0], field), encode(originals, [0, 1, 0, 0], field)]
        packet = recode(received, [1, 1], field)
        self.assertEqual(packet.encoding_vector.tolist(), [1, 1, 0, 0])
        self.assertEqual(packet.payload.tolist(), (originals[0].payload ^ originals[1].payload).tolist())

    def test_recode_composition(self):
        """Recoding coded packets matches encoding the originals with W x F."""
        field = self.field(4)
        for seed in range(20):
            rng = np.random.default_rng(seed)
            n, r = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            originals = self.originals(field, n, 2, seed=seed)
            f_rows = [random_coefficients(n, field, rng) for _ in range(r)]
            w = random_coefficients(r, field, rng)
            received = [encode(originals, row, field) for row in f_rows]

            packet = recode(received, LocalCoefficients(w), field)
            composed = matrix_product(w.tolist(), [row.tolist() for row in f_rows], field)
            self.assertEqual(packet.encoding_vector.tolist(), composed)
            payloads = [p.payload.tolist() for p in received]
            self.assertEqual(packet.payload.tolist(), matrix_product(w.tolist(), payloads, field))
            if any(composed):
                self.assertEqual(packet, encode(originals, composed, field))

    def test_recode_errors(self):
        field = self.field(8)
        packet = encode(self.originals(field, 2, 3), [1, 2], field)
        with self.assertRaises(CodecError):
            recode([packet, packet], [0, 0], field)
        with self.assertRaises(CodecError):
            recode([packet, packet], [1], field)
        with self.assertRaises(CodecError):
            recode([], [1], field)
        with self.assertRaises(CodecError):
            recode([packet, CodedPacket([1, 0, 0], [1, 2, 3])], [1, 1], field)

    def test_full_rank_probability(self):
        self.assertAlmostEqual(full_rank_probability(2, 1), 0.375)
        self.assertAlmostEqual(full_rank_probability(2, 1, reject_zero=True), 2 / 3)
        self.assertAlmostEqual(full_rank_probability(1, 8), 255 / 256)
        rates = [full_rank_probability(4, s) for s in (1, 2, 4, 8, 16)]
        self.assertEqual(rates, sorted(rates))

    def test_encoder(self):
        field = self.field(8, table_mode=True)
        originals = self.originals(field, 4, 6)
        params = GenerationParams(4, 6, field)
        first = Encoder(originals, params, seed=3, logger=self.logger).coded_packets(5)
        second = Encoder(originals, params, seed=3, logger=self.logger).coded_packets(5)
        self.assertEqual(first, second)
        for packet in first:
            self.assertEqual(packet, encode(originals, packet.encoding_vector, field))

        with self.assertRaises(CodecError):
            Encoder(originals[:3], params, seed=3, logger=self.logger)

    def test_packet_check(self):
        field = self.field(4)
        params = GenerationParams(2, 2, field)
        CodedPacket([1, 2], [3, 4]).check(params)
        with self.assertRaises(CodecError):
            CodedPacket([1, 2, 3], [3, 4]).check(params)
        with self.assertRaises(CodecError):
            CodedPacket([1, 16], [3, 4]).check(params)


if __name__ == "__main__":
    main()
