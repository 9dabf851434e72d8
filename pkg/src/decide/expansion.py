from typing import Iterator, List, Tuple, Union

Piece = Union[int, "Expansion"]


class Expansion:
    """Original vertices hidden inside a working edge, read from one end to the other.

    Joining and reversing are O(1) in the size of the pieces: the result only
    references its parts. Reading the sequence walks the structure once.
    """

    __slots__ = ("_parts", "_flipped", "size")

    def __init__(self, parts: Tuple[Piece, ...] = (), flipped: bool = False, size: int = 0):
        self._parts = parts
        self._flipped = flipped
        self.size = size

    @classmethod
    def join(cls, *pieces: Piece) -> "Expansion":
        """Concatenate original vertex ids and expansions in order"""
        parts = []
        size = 0
        for piece in pieces:
            if isinstance(piece, Expansion):
                if piece.size == 0:
                    continue
                size += piece.size
            else:
                size += 1
            parts.append(piece)
        if not parts:
            return EMPTY
        if len(parts) == 1 and isinstance(parts[0], Expansion):
            return parts[0]
        return cls(tuple(parts), False, size)

    def reversed(self) -> "Expansion":
        if self.size == 0:
            return self
        return Expansion(self._parts, not self._flipped, self.size)

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        stack: List[Tuple[Piece, bool]] = [(self, False)]
        while stack:
            piece, flipped = stack.pop()
            if not isinstance(piece, Expansion):
                yield piece
                continue
            flipped ^= piece._flipped
            parts = piece._parts
            # push in reverse of the wanted reading order
            ordered = parts if flipped else parts[::-1]
            stack.extend((part, flipped) for part in ordered)

    def __repr__(self) -> str:
        return f"Expansion({list(self)})"


EMPTY = Expansion()
