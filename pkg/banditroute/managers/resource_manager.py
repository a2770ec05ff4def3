import importlib.resources

import banditroute.resources
from banditroute import config


class ResourceManager:
    """
    An interface to simplify loading resources from the `/banditroute/resources/` data directory, such as the packaged
    example networks. Loaded files are optionally cached to reduce overhead on future calls.
    """

    _raw_data: dict[str, str] = {}

    @classmethod
    def reset_cache(cls) -> None:
        """
        Reset the cache by deleting the contents of the `ResourceManager._raw_data` dict.
        """
        cls._raw_data.clear()

    @classmethod
    def list(cls, suffix: str = ".json") -> list[str]:
        """
        List the names of the packaged resources with a given suffix.

        Args:
            suffix (str): The file suffix to filter by.

        Returns:
            list[str]: Sorted resource file names.
        """
        root = importlib.resources.files(banditroute.resources)
        return sorted(entry.name for entry in root.iterdir() if entry.name.endswith(suffix))

    @classmethod
    def load_raw(cls, filename: str, cache: bool = True, reset: bool = False) -> str:
        """
        Load a specified file by filename and return its contents as a string.

        Args:
            filename (str): The name of the resource file, including its suffix.
            cache (bool): If True, cache the loaded data to reduce overhead the next time it is loaded.
            reset (bool): If set to True, reloads the contents from file, disregarding the current state of the cache.

        Returns:
            str: The resource file's contents as a string.

        Raises:
            FileNotFoundError: If no resource of that name is packaged.
        """
        if reset or filename not in cls._raw_data:
            path = importlib.resources.files(banditroute.resources).joinpath(filename)
            try:
                with path.open(mode="r", encoding=config.ENCODING) as fs:
                    data = fs.read()
            except FileNotFoundError:
                available = ", ".join(f"`{name}`" for name in cls.list())
                message = f"Class `ResourceManager` found no such resource: `{filename}`, available: {available}"
                raise FileNotFoundError(message)

            if cache:
                cls._raw_data[filename] = data
        else:
            data = cls._raw_data[filename]

        return data

