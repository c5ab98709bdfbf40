import dataclasses
import logging


def write_csv(records, path, manifest_hash=None):
    """ Write comparison, loss or sweep records to a CSV file

    Columns follow the field order of the record type. None and NaN are
    written as empty cells. When manifest_hash is given, the file starts with
    the comment line ``# manifest_hash=<hash>`` before the header; read it
    back with ``pandas.read_csv(path, comment='#')``.

    Args:
        records:        non empty sequence of records of one type
        path:           output file, parent directories are created
        manifest_hash:  hash of the run manifest the table comes from

    Returns:
        The pandas DataFrame that was written
    """

    import pandas as pd

    from .._py_tools import output_dir

    logger = logging.getLogger(__name__)

    records = list(records)
    if not records:
        raise ValueError('no records to write')
    record_type = type(records[0])
    if not dataclasses.is_dataclass(record_type) or any(type(rec) is not record_type for rec in records):
        raise TypeError('write_csv expects records of a single dataclass type')

    columns = [fld.name for fld in dataclasses.fields(record_type)]
    df = pd.DataFrame([dataclasses.asdict(rec) for rec in records], columns=columns)

    output_dir(path)
    with open(path, 'w', newline='') as handle:
        if manifest_hash is not None:
            handle.write('# manifest_hash=' + manifest_hash + '\n')
        df.to_csv(handle, index=False)

    logger.info('wrote ' + str(len(df)) + ' rows to ' + str(path))
    return df
