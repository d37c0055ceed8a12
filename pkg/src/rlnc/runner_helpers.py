from pathlib import Path
from typing import Union

from zenlib.util import colorize

__version__ = "1.1.0"
__author__ = "desultory"


class RunnerHelpers:
    """Mixin class for the NetcodeRunner class."""

    def _get_out_path(self, default: Union[Path, str]) -> Path:
        """
        Resolves where a command writes its result.
        Without an output set, the default is used.
        If the output is a directory, the default file name is used within it.
        """
        default = Path(default)
        if not self["output"]:
            return default
        if self["output"].is_dir():
            return self["output"] / default.name
        return self["output"]

    def _mkdir(self, path: Path) -> None:
        """Creates a directory, along with any missing parents."""
        if path.is_dir():
            return self.logger.log(5, "Directory already exists: %s" % path)

        if not path.parent.is_dir():
            self.logger.debug("Parent directory does not exist: %s" % path.parent)
            self._mkdir(path.parent)

        path.mkdir()
        self.logger.debug("Created directory: %s" % path)

    def _write(self, file_name: Union[Path, str], contents: Union[bytes, list[str]]) -> Path:
        """
        Writes a file, creating parent directories as needed.
        Bytes are written as-is, lists of strings are written one per line.
        """
        file_path = Path(file_name)
        if not file_path.parent.is_dir():
            self.logger.debug("Parent directory for '%s' does not exist: %s" % (file_path.name, file_path.parent))
            self._mkdir(file_path.parent)

        if file_path.is_file():
            self.logger.warning("File already exists, overwriting: %s" % colorize(file_path, "yellow"))

        if isinstance(contents, bytes):
            file_path.write_bytes(contents)
        else:
            file_path.write_text("\n".join(contents) + "\n")

        self.logger.info("Wrote file: %s" % colorize(file_path, "green", bright=True))
        return file_path

    def _read(self, file_name: Union[Path, str]) -> bytes:
        """Reads a whole file, raising a FileNotFoundError if it is missing."""
        file_path = Path(file_name)
        if not file_path.is_file():
            raise FileNotFoundError("Input file not found: %s" % file_path)
        data = file_path.read_bytes()
        self.logger.info("[%s] Read bytes: %s" % (file_path, colorize(len(data), "green")))
        return data
