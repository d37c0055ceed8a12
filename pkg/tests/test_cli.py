from json import loads
from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase, main
from unittest.mock import patch

import numpy as np
from rlnc import RankShortfallError, WireFormatError
from rlnc.codec import GenerationParams, SourcePacket, encode
from rlnc.galois import field_new
from rlnc.main import main as rlnc_main
from rlnc.netcode_runner import NetcodeRunner
from rlnc.wire import ContainerHeader, read_container, write_container
from zenlib.logging import loggify


@loggify
class TestCLI(TestCase):
    def setUp(self):
        self.tmpdir = TemporaryDirectory()
        self.path = Path(self.tmpdir.name)

    def tearDown(self):
        self.tmpdir.cleanup()

    def runner(self, **kwargs):
        return NetcodeRunner(logger=self.logger, **kwargs)

    def write_input(self, size, seed=0, name="input.bin"):
        path = self.path / name
        path.write_bytes(np.random.default_rng(seed).bytes(size))
        return path

    def run_main(self, *argv):
        with patch("sys.argv", ["rlnc", *argv]):
            with self.assertRaises(SystemExit) as context:
                rlnc_main()
        return context.exception.code

    def test_defaults(self):
        runner = self.runner()
        expected = {
            "field_bits": 8,
            "packets": 16,
            "redundancy": 20,
            "seed": 1,
            "table_mode": True,
            "coding": True,
            "polynomial": 0,
            "slots": 20,
            "scenario": "butterfly",
            "payload_symbols": 8,
            "op": "mul",
            "iterations": 100000,
            "row": -1,
            "_loss_override": False,
        }
        for key, value in expected.items():
            self.assertEqual(runner[key], value, key)
        self.assertIsNone(runner["input"])
        self.assertEqual(sorted(runner.commands), ["bench", "decode", "encode", "sim", "table"])

    def test_encode_decode_roundtrip(self):
        """Files just under 64 KiB, for every symbol width and several generation sizes."""
        for s in (1, 2, 4, 8, 16):
            for n in (1, 4, 16):
                source = self.write_input(65536 - 3 * n - s, seed=s * 100 + n, name=f"input_{s}_{n}.bin")
                redundancy = n + (16 if s <= 2 else 4)
                container = self.runner(input=source, field_bits=s, packets=n, redundancy=redundancy).run("encode")
                self.assertEqual(container, source.with_name(source.name + ".ncp"))
                output = self.runner(input=container, output=self.path / f"output_{s}_{n}.bin").run("decode")
                self.assertEqual(output.read_bytes(), source.read_bytes(), (s, n))

    def test_default_decode_path(self):
        source = self.write_input(100)
        container = self.runner(input=source).run("encode")
        output = self.runner(input=container).run("decode")
        self.assertEqual(output, self.path / "input.bin.dec")
        self.assertEqual(output.read_bytes(), source.read_bytes())

    def test_output_directory(self):
        source = self.write_input(100)
        out_dir = self.path / "out"
        out_dir.mkdir()
        container = self.runner(input=source, output=out_dir).run("encode")
        self.assertEqual(container, out_dir / "input.bin.ncp")

    def test_deterministic_encode(self):
        source = self.write_input(1000)
        first = self.runner(input=source, output=self.path / "first.ncp").run("encode").read_bytes()
        second = self.runner(input=source, output=self.path / "second.ncp").run("encode").read_bytes()
        reseeded = self.runner(input=source, seed=2, output=self.path / "third.ncp").run("encode").read_bytes()
        self.assertEqual(first, second)
        self.assertNotEqual(first, reseeded)

    def test_rank_shortfall(self):
        source = self.write_input(1000)
        container = self.runner(input=source, packets=8, redundancy=5).run("encode")
        with self.assertRaises(RankShortfallError) as context:
            self.runner(input=container).run("decode")
        self.assertEqual((context.exception.rank, context.exception.n), (5, 8))
        self.assertFalse((self.path / "input.bin.dec").exists())

    def test_one_packet_short(self):
        source = self.write_input(1000)
        container = self.runner(input=source, packets=8, redundancy=7).run("encode")
        with self.assertRaises(RankShortfallError) as context:
            self.runner(input=container).run("decode")
        self.assertEqual(context.exception.rank, 7)

    def test_partial_decode_report(self):
        field = field_new(8, logger=self.logger)
        params = GenerationParams(4, 4, field)
        originals = [SourcePacket(payload) for payload in np.random.default_rng(4).integers(0, 256, size=(4, 4))]
        packets = [encode(originals, coeffs, field) for coeffs in ([1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 1])]
        container = self.path / "partial.ncp"
        container.write_bytes(write_container(ContainerHeader.from_params(params, 16), packets, field))

        with self.assertRaises(RankShortfallError) as context:
            self.runner(input=container).run("decode")
        self.assertEqual(context.exception.rank, 3)
        self.assertEqual(context.exception.decoded, [0, 2])

    def test_duplicate_and_shuffled_packets(self):
        source = self.write_input(2000, seed=3)
        container = self.runner(input=source, packets=8, redundancy=10).run("encode")
        header, packets = read_container(container.read_bytes())
        order = np.random.default_rng(3).permutation(len(packets))
        changed = self.path / "shuffled.ncp"
        changed.write_bytes(write_container(header, [packets[i] for i in order] + [packets[0]]))

        for path in (container, changed):
            output = self.runner(input=path, output=self.path / (path.name + ".out")).run("decode")
            self.assertEqual(output.read_bytes(), source.read_bytes())

    def test_corrupt_container(self):
        source = self.write_input(500)
        data = self.runner(input=source).run("encode").read_bytes()
        for name, corrupt in (("magic.ncp", b"NCP2" + data[4:]), ("truncated.ncp", data[:-3])):
            path = self.path / name
            path.write_bytes(corrupt)
            with self.assertRaises(WireFormatError):
                self.runner(input=path).run("decode")

    def test_bad_input(self):
        with self.assertRaises(ValueError):
            self.runner().run("encode")
        with self.assertRaises(FileNotFoundError):
            self.runner(input=self.path / "missing.bin").run("encode")
        with self.assertRaises(ValueError):
            self.runner(input=self.write_input(0)).run("encode")

    def test_table_row(self):
        lines = self.runner(row=10).run("table")
        self.assertEqual(len(lines), 2)
        self.assertIn("x^8 + x^4 + x^3 + x + 1", lines[0])
        values = [int(value) for value in lines[1].split("|")[1].split()]
        self.assertEqual(len(values), 256)
        self.assertEqual(values[41], 1)
        self.assertEqual(values.count(1), 1)

    def test_table_gf2(self):
        lines = self.runner(field_bits=1).run("table")
        self.assertEqual(lines[1:], ["0 | 0 0", "1 | 0 1"])

    def test_table_limits(self):
        with self.assertRaises(ValueError):
            self.runner(field_bits=16).run("table")
        with self.assertRaises(ValueError):
            self.runner(field_bits=4, row=16).run("table")

    def test_custom_polynomial(self):
        lines = self.runner(field_bits=4, polynomial=0b1001, row=2).run("table")
        self.assertIn("x^4 + x^3 + 1", lines[0])
        with self.assertRaises(ValueError):
            self.runner(field_bits=4, polynomial=0b0101).run("table")

    def test_bench(self):
        lines = self.runner(op="mul", iterations=20000).run("bench")
        rates = {line.split()[0]: float(line.split()[-2]) for line in lines}
        self.assertEqual(set(rates), {"table", "shift"})
        self.assertGreaterEqual(rates["table"], rates["shift"])

        lines = self.runner(field_bits=16, op="inv", iterations=200).run("bench")
        self.assertEqual(len(lines), 1)
        self.assertTrue(lines[0].startswith("shift GF(2^16) inv:"))

    def test_config_layering(self):
        runner = self.runner(config="tests/relay.toml", seed=7)
        self.assertEqual(runner["scenario"], "relay")
        self.assertEqual(runner["packets"], 8)
        self.assertEqual(runner["seed"], 7)

    def test_bad_config(self):
        with self.assertRaises(ValueError):
            self.runner(config="tests/bad_config.toml")
        with self.assertRaises(ValueError):
            self.runner(config="tests/missing.toml")

    def test_unknown_config_key(self):
        runner = self.runner(config="tests/unknown_key.toml")
        with self.assertRaises(ValueError):
            runner.run("table")

    def test_unknown_command(self):
        with self.assertRaises(ValueError):
            self.runner().run("transmit")

    def test_assignment_validation(self):
        for kwargs in (
            {"field_bits": 3},
            {"packets": 0},
            {"packets": 70000},
            {"redundancy": 0},
            {"seed": -1},
            {"slots": 0},
            {"loss": 1.5},
            {"coding": "maybe"},
            {"scenario": "ring"},
            {"op": "pow"},
            {"iterations": 0},
        ):
            with self.subTest(**kwargs):
                with self.assertRaises(ValueError):
                    self.runner(**kwargs)
        self.assertFalse(self.runner(coding="off")["coding"])
        self.assertTrue(self.runner(coding="on")["coding"])

    def test_sim_command(self):
        out = self.path / "slots.jsonl"
        lines = self.runner(config="tests/relay.toml", output=out).run("sim")
        self.assertTrue(lines[0].startswith("scenario=relay coding=on n=8 slots=20 seed=3"))
        self.assertIn("decoded=8 verified=8", lines[1])
        records = [loads(line) for line in out.read_text().splitlines()]
        self.assertEqual(len(records), 20)
        self.assertEqual(records[0]["slot"], 1)
        self.assertEqual(records[-1]["rank"]["D"], 8)

    def test_sim_custom_topology(self):
        lines = self.runner(config="tests/diamond.toml").run("sim")
        self.assertTrue(lines[0].startswith("scenario=diamond"))
        self.assertIn("decoded=8 verified=8", lines[1])

    def test_sim_loss_override(self):
        runner = self.runner(scenario="point", loss=1.0, slots=5)
        self.assertTrue(runner["_loss_override"])
        lines = runner.run("sim")
        self.assertIn("completed=no", lines[1])

    def test_sim_coding_off(self):
        lines = self.runner(coding="off", packets=16, slots=12).run("sim")
        self.assertTrue(lines[0].startswith("scenario=butterfly coding=off"))
        self.assertEqual(len([line for line in lines if line.startswith("destination=")]), 2)

    def test_exit_codes(self):
        source = self.write_input(1000)
        container = self.runner(input=source, packets=8, redundancy=5).run("encode")
        self.assertEqual(self.run_main("decode", str(container)), 3)

        corrupt = self.path / "corrupt.ncp"
        corrupt.write_bytes(b"NCP9" + container.read_bytes()[4:])
        self.assertEqual(self.run_main("decode", str(corrupt)), 4)

        self.assertEqual(self.run_main("encode", str(source), "-c", "tests/bad_config.toml"), 2)
        self.assertEqual(self.run_main("sim", "--scenario", "ring"), 2)
        self.assertEqual(self.run_main("encode", str(self.path / "missing.bin")), 1)


if __name__ == "__main__":
    main()
