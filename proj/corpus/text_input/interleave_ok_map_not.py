import tensorflow as tf


def split(line):
    return tf.strings.split(line)


files = tf.data.Dataset.list_files("/data/*.csv")
ds = files.interleave(tf.data.TextLineDataset, num_parallel_calls=tf.data.AUTOTUNE)
ds = ds.batch(64)
ds = ds.map(split)  # expect: DPM001
