# ruff: noqa: D100, D101, D102

import json
import unittest

from akpz import tiling
from akpz.enums import LozengeType
from akpz.enums import TilingFormat
from akpz.errors import InvalidArgumentException
from akpz.interlacing import InterlacingArray
from akpz.interlacing import classify_lozenge
from akpz.interlacing import packed_initial
from tests import payload


class TestListing(unittest.TestCase):
    def test_packed(self):
        tiles = tiling.tile_listing(packed_initial(2), margin=0)

        assert [(tile.x, tile.n, tile.type) for tile in tiles] == [
            (-2, 1, LozengeType.II),
            (-1, 1, LozengeType.I),
            (-2, 2, LozengeType.I),
            (-1, 2, LozengeType.I),
        ]

    def test_one_type_one_tile_per_particle(self):
        a = InterlacingArray.from_json(json.dumps(payload.MOVED_3))
        tiles = tiling.tile_listing(a)

        assert sum(tile.type is LozengeType.I for tile in tiles) == 6

    def test_matches_classify(self):
        a = InterlacingArray.from_json(json.dumps(payload.MOVED_3))

        for tile in tiling.tile_listing(a, margin=3):
            assert classify_lozenge(a, tile.x, tile.n) is tile.type

    def test_window(self):
        a = InterlacingArray.from_json(json.dumps(payload.MOVED_3))

        assert tiling.tiling_window(a, 2) == (-5, 4)
        assert len(tiling.tile_listing(a, margin=2)) == 3 * 10

    def test_negative_margin(self):
        with self.assertRaises(InvalidArgumentException):
            tiling.tiling_window(packed_initial(2), -1)

    def test_invalid_array(self):
        a = InterlacingArray.from_json(json.dumps(payload.BROKEN_2))

        with self.assertRaises(InvalidArgumentException):
            tiling.tile_listing(a)


class TestExport(unittest.TestCase):
    def test_json(self):
        a = InterlacingArray.from_json(json.dumps(payload.MOVED_3))
        data = tiling.tiling_export(a, TilingFormat.JSON, margin=1)
        decoded = json.loads(data)

        assert decoded[0] == {"x": -4, "n": 1, "type": decoded[0]["type"]}
        assert tiling.tiles_from_json(data) == tiling.tile_listing(a, margin=1)
        for entry in decoded:
            assert LozengeType(entry["type"]) is classify_lozenge(a, entry["x"], entry["n"])

    def test_svg(self):
        a = packed_initial(2)
        data = tiling.tiling_export(a, "svg", margin=0)
        text = data.decode("utf-8")

        assert text.startswith('<?xml version="1.0" encoding="UTF-8"?>')
        assert text.rstrip().endswith("</svg>")
        assert text.count("<polygon") == 4
        assert 'data-x="-2" data-n="1" data-type="II"' in text
        assert text.count(f'fill="{tiling.LOZENGE_FILLS[LozengeType.I]}"') == 3

    def test_svg_is_deterministic(self):
        a = InterlacingArray.from_json(json.dumps(payload.MOVED_3))

        assert tiling.tiling_export(a, TilingFormat.SVG) == tiling.tiling_export(a, TilingFormat.SVG)

    def test_unknown_format(self):
        with self.assertRaises(InvalidArgumentException):
            tiling.tiling_export(packed_initial(2), "png")

    def test_nothing_to_draw(self):
        with self.assertRaises(InvalidArgumentException):
            tiling.tiles_to_svg([])
