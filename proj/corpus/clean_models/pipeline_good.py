import tensorflow as tf


def parse_batch(x):
    return x


ds = tf.data.TFRecordDataset(["a.tfrecord"])
ds = ds.shuffle(100)
ds = ds.batch(32)
ds = ds.map(parse_batch, num_parallel_calls=tf.data.AUTOTUNE)
ds = ds.prefetch(1)
