import tensorflow as tf


def decode(path):
    return tf.image.decode_jpeg(tf.io.read_file(path))


ds = tf.data.Dataset.list_files("/data/*.jpg")
ds = ds.map(decode, num_parallel_calls=tf.data.AUTOTUNE)  # expect: MOB001
ds = ds.batch(64)
