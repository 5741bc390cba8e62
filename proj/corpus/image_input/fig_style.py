import glob
import tensorflow as tf


def _parse(record):
    return tf.io.parse_single_example(record, {})


def make_dataset(pattern):
    files = glob.glob(pattern)
    ds = tf.data.TFRecordDataset(files)
    ds = ds.shuffle(1000)
    ds = ds.map(_parse)  # expect: MOB001, DPM001
    ds = ds.batch(32)
    ds = ds.repeat()
    return ds
