import tensorflow as tf

a = tf.constant([[1.0]])
b = tf.constant([[2.0]])


def build():
    return tf.matmul(a, b)  # expect: RNC001


def build_with(v):
    return tf.matmul(a, v)


for i in range(5):
    build()
    build_with(tf.constant([[float(i)]]))
