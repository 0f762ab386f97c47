def read_lines(path):
    """Return the lines of a UTF-8 text file without their line endings."""
    with open(path, "r", encoding="utf-8") as f:
        return f.read().split("\n")


class Loader:
    """ Skeleton class for loading data from files.
    As a minimum it must include following functionality:
    - load/read data from a file (mandatory)
    - pre-process the read data into domain objects
    - fetch single samples
    """

    def __init__(self):
        """ Constructor where subclasses set the paths and options they need
        before calling it. Data is loaded and pre-processed right away.
        """
        self._load_data()
        self._preprocess_data()

    def __call__(self, idx):
        """ Fetch a specific sample. """
        return self.samples[idx]

    def __len__(self):
        return len(self.samples)

    def _load_data(self):
        """ Load data from a file.
        List of samples should be an instance variable, e.g.:

          self.samples = [(line_number, text), ...]
        """
        raise NotImplementedError("Please implement `_load_data()`")

    def _preprocess_data(self):
        """ Turn the raw samples into whatever the loader provides.
        Nothing is done by default.
        """
        pass
