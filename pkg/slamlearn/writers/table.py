from ..imports import *

__all__ = ["write_table"]


def write_table(filepath, table, format=None):
    """
    Write a table (astropy `Table` or pandas `DataFrame`).

    The format is guessed from the extension (".ecsv" or ".csv")
    unless given.
    """
    if isinstance(table, pd.DataFrame):
        table = Table.from_pandas(table)
    if format is None:
        if filepath.lower().endswith(".ecsv"):
            format = "ascii.ecsv"
        elif filepath.lower().endswith(".csv"):
            format = "ascii.csv"
        else:
            raise ValueError(f"🧩 Can't guess a table format for {filepath}; use .ecsv or .csv.")
    table.write(filepath, format=format, overwrite=True)
