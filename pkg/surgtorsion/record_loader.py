import json
import os
from typing import Dict, Optional

from .exceptions import InputParseError
from .groups import PermGroup, builtin_group, parse_permutation
from .knots import MarkedPresentation, parse_pd, wirtinger
from .presentation import FinitePresentation, GroupWord
from .representations import (Representation, matrix_from_rows, standard_representation,
                              trivial_representation)
from .seifert import SeifertParams, parse_params

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fixtures")


class RecordLoader:
    """Loads knots, groups, representations and Seifert parameters from files or built-in names."""

    def __init__(self, mirror: bool = False, search_path: Optional[str] = FIXTURES):
        self.mirror = mirror
        self.search_path = search_path

    def _resolve(self, path: str) -> str:
        if os.path.exists(path) or not self.search_path:
            return path
        bundled = os.path.join(self.search_path, path)
        return bundled if os.path.exists(bundled) else path

    def _read(self, path: str) -> str:
        try:
            with open(self._resolve(path), 'r', encoding='utf-8') as f:
                return f.read()
        except IOError as e:
            raise InputParseError(f"Failed to read {path}: {e}")

    def load_knot(self, path: str) -> MarkedPresentation:
        """
        Loads a knot file: {"name", "pd": [[a, b, c, d], ...]} or
        {"name", "presentation": {"generators", "relators", "meridian", "longitude"}}. The
        presentation may also be given as "generators: ...\nrelators: ..." text, with "meridian"
        and "longitude" next to it in the record.

        Args:
            path (str): File path, or the name of a bundled fixture.

        Returns:
            MarkedPresentation: Marked knot group (mirrored if the loader was built with mirror=True).

        Raises:
            InputParseError: On unreadable or malformed files.
        """
        try:
            data = json.loads(self._read(path))
        except ValueError as e:
            raise InputParseError(f"Failed to parse knot file {path}: {e}")
        if not isinstance(data, dict):
            raise InputParseError(f"Knot file {path} must hold a JSON object")
        name = str(data.get("name", os.path.splitext(os.path.basename(path))[0]))
        if "pd" in data:
            return wirtinger(parse_pd(data["pd"]), name, mirror=self.mirror)
        if "presentation" in data:
            marked = self._marked_presentation(data["presentation"], name, data)
            return marked.mirrored() if self.mirror else marked
        raise InputParseError(f"Knot file {path} has neither 'pd' nor 'presentation'")

    def _marked_presentation(self, data, name: str, marks: Dict) -> MarkedPresentation:
        try:
            if isinstance(data, str):
                # "generators: ...\nrelators: ..." text, marked by the enclosing record
                presentation = FinitePresentation.parse(data)
                data = marks
            else:
                presentation = FinitePresentation(tuple(str(g) for g in data["generators"]),
                                                  tuple(GroupWord.parse(r) for r in data.get("relators", [])))
            meridian = str(data.get("meridian", presentation.generators[0]))
            longitude = GroupWord.parse(data.get("longitude", "1"))
            conjugate = tuple(data.get("conjugate_generators", (meridian,)))
            return MarkedPresentation(presentation, meridian, longitude, 1, name, conjugate)
        except (KeyError, IndexError, TypeError, ValueError) as e:
            raise InputParseError(f"Invalid presentation for {name}: {e}")

    def load_group(self, source: str) -> PermGroup:
        """
        A built-in name (A4, A5, S3, C6, trivial, ...) or a group file: the degree on
        the first line, then one generator per line in cycle notation; '#' starts a comment.

        Raises:
            InputParseError: On unknown names or malformed files.
        """
        group = builtin_group(source)
        if group is not None:
            return group
        lines = []
        for raw in self._read(source).splitlines():
            line = raw.split("#", 1)[0].strip()
            if line:
                lines.append(line)
        if not lines:
            raise InputParseError(f"Group file {source} is empty")
        try:
            degree = int(lines[0])
        except ValueError:
            raise InputParseError(f"Group file {source} must start with the degree, got {lines[0]!r}")
        generators = [parse_permutation(line, degree) for line in lines[1:]]
        name = os.path.splitext(os.path.basename(source))[0]
        return PermGroup(degree, generators, name)

    def load_representation(self, source: str, group: PermGroup) -> Representation:
        """
        Built-in names A5-standard, standard and trivial-<n>, or a JSON file
        {"dimension": n, "images": [[[...], ...], ...]} with one matrix per group generator.

        Raises:
            InputParseError: On unknown names or malformed files.
        """
        if source in ("A5-standard", "standard"):
            if source == "A5-standard" and (group.degree != 5 or group.order != 60):
                raise InputParseError(f"A5-standard needs A5, got {group.name}")
            return standard_representation(group)
        if source.startswith("trivial-"):
            try:
                return trivial_representation(group, int(source[len("trivial-"):]))
            except ValueError:
                raise InputParseError(f"Invalid representation name {source!r}")
        try:
            data = json.loads(self._read(source))
            images = [matrix_from_rows(rows, f"image {k + 1}") for k, rows in enumerate(data["images"])]
            dimension = int(data.get("dimension", images[0].rows if images else 1))
        except (ValueError, KeyError, TypeError, IndexError) as e:
            raise InputParseError(f"Failed to load representation {source}: {e}")
        if any(m.rows != dimension for m in images):
            raise InputParseError(f"Representation {source}: images must be {dimension}x{dimension}")
        name = os.path.splitext(os.path.basename(source))[0]
        return Representation(group, images, name, dimension)

    def load_params(self, source: str) -> SeifertParams:
        """A params string such as "3/2,-3,-5" or a file holding one."""
        path = self._resolve(source)
        if os.path.isfile(path):
            text = " ".join(line.split("#", 1)[0] for line in self._read(path).splitlines())
            return parse_params(text)
        return parse_params(source)

