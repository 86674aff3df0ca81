"""
Directory of canonical JSON golden files with a revision history per name.

Each save writes a numbered revision <name>-<k>.json and records its digest in
<name>_log.json; a revision byte-identical to the previous one is dropped
again, so re-emitting unchanged data leaves the store untouched.
"""

import filecmp
import hashlib
import json
import logging
from pathlib import Path
from typing import Any, List, Optional, Union

from ..codec import canonical
from ..errors import CodecError

logger = logging.getLogger(__name__)


class GoldenStore:
    def __init__(self, root: Union[str, Path] = "goldens") -> None:

        self.root = Path(root).resolve()

    def __path(self, filename: str) -> Path:

        return self.root / (filename + ".json")

    def __history_path(self, name: str) -> Path:

        return self.__path(f"{name}_log")

    def __revision(self, name: str, k: int) -> Path:

        return self.__path(f"{name}-{k}")

    def history(self, name: str) -> List[str]:

        path = self.__history_path(name)
        if not path.is_file():
            return []
        return json.loads(path.read_text())

    def __write_history(self, name: str, history: List[str]) -> None:

        self.__history_path(name).write_text(canonical(history))

    def path(self, name: str) -> Optional[Path]:
        """Latest revision of `name`, if any."""

        history = self.history(name)
        if history:
            return self.__revision(name, len(history) - 1)
        return None

    def save(self, name: str, data: Any) -> Path:

        self.root.mkdir(parents=True, exist_ok=True)
        text = canonical(data)
        history = self.history(name)
        last = self.path(name)

        history.append(hashlib.sha256(text.encode()).hexdigest())
        new = self.__revision(name, len(history) - 1)
        new.write_text(text)

        if last and filecmp.cmp(last, new, shallow=False):
            new.unlink()
            history.pop()
            logger.debug("%s unchanged", name)
            return last
        self.__write_history(name, history)
        logger.info("saved %s revision %d", name, len(history) - 1)
        return new

    def load(self, name: str) -> Any:

        path = self.path(name)
        if path is None:
            raise CodecError(f"no golden named {name}", name=name)
        return json.loads(path.read_text())

    def verify(self, name: str, data: Any) -> bool:
        """Byte comparison of the canonical rendering with the stored golden."""

        path = self.path(name)
        return path is not None and path.read_text() == canonical(data)

    def names(self) -> List[str]:

        if not self.root.is_dir():
            return []
        return sorted(p.name[: -len("_log.json")] for p in self.root.glob("*_log.json"))

    def clear(self, name: Optional[str] = None) -> None:

        for target in [name] if name else self.names():
            for k in range(len(self.history(target))):
                self.__revision(target, k).unlink(missing_ok=True)
            self.__history_path(target).unlink(missing_ok=True)
