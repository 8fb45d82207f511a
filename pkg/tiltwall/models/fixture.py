from dataclasses import dataclass
from pathlib import Path
from typing import Any

from tiltwall.enums import Provenance, QueryType
from tiltwall.exceptions import MalformedFixture
from tiltwall.type_alias import JsonDict

REQUIRED_FIELDS = ("name", "paper_ref", "query", "params", "expect", "provenance")


@dataclass(frozen=True)
class Fixture:
    """A stored query with its exact expected answer.

    :param name: unique name of the fixture
    :param paper_ref: the published statement being replayed
    :param query: kind of computation
    :param params: query specific parameters, numbers as rational strings
    :param expect: the expected output; candidate lists compare as unordered sets
    :param provenance: where the expected value comes from
    :param path: file the fixture was read from
    """

    name: str
    paper_ref: str
    query: QueryType
    params: JsonDict
    expect: Any
    provenance: Provenance
    path: Path

    @classmethod
    def from_json(cls, data: Any, path: Path) -> "Fixture":
        """
        Validates the corpus schema of one fixture.

        :param data: decoded JSON object
        :param path: source file, for error messages
        :return: the fixture
        :raises MalformedFixture: naming the file and the first offending field
        """
        if not isinstance(data, dict):
            raise MalformedFixture(path, "<root>", "expected a JSON object")
        for name in REQUIRED_FIELDS:
            if name not in data:
                raise MalformedFixture(path, name, "missing")
        for name in ("name", "paper_ref"):
            if not isinstance(data[name], str) or not data[name]:
                raise MalformedFixture(path, name, "expected a non-empty string")
        if not isinstance(data["params"], dict):
            raise MalformedFixture(path, "params", "expected a JSON object")
        try:
            query = QueryType(data["query"])
        except ValueError:
            raise MalformedFixture(path, "query", f"unknown query '{data['query']}'") from None
        try:
            provenance = Provenance(data["provenance"])
        except ValueError:
            raise MalformedFixture(path, "provenance", f"unknown provenance '{data['provenance']}'") from None
        return cls(data["name"], data["paper_ref"], query, data["params"], data["expect"], provenance, path)
