import glob
import tensorflow as tf


def _batch_parser(records):
    return records


def init_dataset(pattern, batch_size):
    files = glob.glob(pattern)
    ds = tf.data.TFRecordDataset(files)
    ds = ds.shuffle(1000)
    ds = ds.batch(batch_size)
    ds = ds.map(_batch_parser, num_parallel_calls=4)
    ds = ds.repeat()
    return ds
